#pragma once

#include <stdexcept>
#include <string>

namespace tecodes {

// More damage than the code is built to absorb.
struct CapacityExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Received data that no codeword explains.
struct NotACodeword : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Erasures leave more than one codeword consistent with the received data.
struct Ambiguous : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A row could not be repaired by the single-deletion decoder.
struct CorruptInput : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Input that the channel model cannot produce (e.g. a row shortened too much).
struct ContractViolation : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace tecodes
