#include "cantus/errors.hpp"

namespace cantus {

std::string_view error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::EmptyInput: return "EmptyInput";
    case ErrorKind::UnpronounceableToken: return "UnpronounceableToken";
    case ErrorKind::NoClassifiableLines: return "NoClassifiableLines";
    case ErrorKind::InvalidProfile: return "InvalidProfile";
    case ErrorKind::EmptyMelody: return "EmptyMelody";
    case ErrorKind::MalformedDocument: return "MalformedDocument";
    case ErrorKind::ZeroDurationNote: return "ZeroDurationNote";
    case ErrorKind::TooLong: return "TooLong";
    case ErrorKind::UnsupportedPlacement: return "UnsupportedPlacement";
    case ErrorKind::DirectionMismatch: return "DirectionMismatch";
    case ErrorKind::EmptyCorpus: return "EmptyCorpus";
    case ErrorKind::VersionMismatch: return "VersionMismatch";
    case ErrorKind::CorruptFile: return "CorruptFile";
    case ErrorKind::NoCompletableHypothesis: return "NoCompletableHypothesis";
    case ErrorKind::SearchSpaceTooLarge: return "SearchSpaceTooLarge";
    case ErrorKind::UnfinishedHypothesis: return "UnfinishedHypothesis";
    case ErrorKind::EmptySet: return "EmptySet";
    case ErrorKind::NoRequiredBoundaries: return "NoRequiredBoundaries";
    case ErrorKind::ExternalCommandFailed: return "ExternalCommandFailed";
    case ErrorKind::IoError: return "IoError";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "UnknownError";
}

}  // namespace cantus
