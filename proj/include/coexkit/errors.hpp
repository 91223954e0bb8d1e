#pragma once

#include <stdexcept>
#include <string>

namespace coexkit {

enum class Errc {
  NonSquare,
  NonFinite,
  NotHermitian,
  ConvergenceFailure,
  DimMismatch,
  SpectrumOutOfRange,
  NonUnitary,
  NotBlockDiagonal,
  DegenerateProbe,
  BadInput,
};

const char* errc_name(Errc c);

class CoexError : public std::runtime_error {
 public:
  CoexError(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const { return code_; }

 private:
  Errc code_;
};

}  // namespace coexkit
