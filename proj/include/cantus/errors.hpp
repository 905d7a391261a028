#ifndef CANTUS_ERRORS_HPP_
#define CANTUS_ERRORS_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace cantus {

// Every recoverable failure in the library is thrown as an Error with one of
// these kinds. The CLI maps kinds to diagnostics and exit codes; tests match
// on kind rather than message text.
enum class ErrorKind {
  EmptyInput,
  UnpronounceableToken,
  NoClassifiableLines,
  InvalidProfile,
  EmptyMelody,
  MalformedDocument,
  ZeroDurationNote,
  TooLong,
  UnsupportedPlacement,
  DirectionMismatch,
  EmptyCorpus,
  VersionMismatch,
  CorruptFile,
  NoCompletableHypothesis,
  SearchSpaceTooLarge,
  UnfinishedHypothesis,
  EmptySet,
  NoRequiredBoundaries,
  ExternalCommandFailed,
  IoError,
  InvalidArgument,
};

std::string_view error_kind_name(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(error_kind_name(kind)) + ": " + message),
        kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace cantus

#endif  // CANTUS_ERRORS_HPP_
