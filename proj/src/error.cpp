#include "gentropy/error.hpp"

namespace gentropy {

std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::EmptyInput: return "EmptyInput";
    case Errc::NegativeProbability: return "NegativeProbability";
    case Errc::NotNormalized: return "NotNormalized";
    case Errc::IndexOutOfRange: return "IndexOutOfRange";
    case Errc::DegenerateSampling: return "DegenerateSampling";
    case Errc::StepTooLarge: return "StepTooLarge";
    case Errc::ParameterOutOfRange: return "ParameterOutOfRange";
    case Errc::DegenerateH: return "DegenerateH";
    case Errc::DomainViolation: return "DomainViolation";
    case Errc::SingularDerivative: return "SingularDerivative";
    case Errc::RankDeficient: return "RankDeficient";
    case Errc::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace gentropy
