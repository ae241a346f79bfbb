#pragma once

#include <string>

#include "sadic/io.hpp"

inline sadic::SequenceFile fixture(const std::string& name) {
  return sadic::load_sequence_file(std::string(SADIC_FIXTURES) + "/" + name);
}
