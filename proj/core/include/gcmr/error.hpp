#ifndef GCMR_ERROR_HPP
#define GCMR_ERROR_HPP

#include <stdexcept>
#include <string>

namespace gcmr {

enum class ErrorKind {
  InvalidParams,
  Infeasible,
  DatasetTooSmall,
  IncompleteShuffle,
  DecodeFailure,
  SingularChannel,
  CoverageMismatch,
  BadInput,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& msg)
      : std::runtime_error(msg), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

inline const char* to_string(ErrorKind k) {
  switch (k) {
    case ErrorKind::InvalidParams:     return "invalid-params";
    case ErrorKind::Infeasible:        return "infeasible";
    case ErrorKind::DatasetTooSmall:   return "dataset-too-small";
    case ErrorKind::IncompleteShuffle: return "incomplete-shuffle";
    case ErrorKind::DecodeFailure:     return "decode-failure";
    case ErrorKind::SingularChannel:   return "singular-channel";
    case ErrorKind::CoverageMismatch:  return "coverage-mismatch";
    case ErrorKind::BadInput:          return "bad-input";
  }
  return "unknown";
}

}  // namespace gcmr

#endif
