#include "colcount/error.hpp"

namespace colcount {

const char* to_string(ErrorKind kind)
{
    switch (kind) {
    case ErrorKind::InvalidParameter: return "invalid-parameter";
    case ErrorKind::InvalidInput: return "invalid-input";
    case ErrorKind::BudgetExceeded: return "budget-exceeded";
    case ErrorKind::SeedsDisconnected: return "seeds-disconnected";
    case ErrorKind::UncolourableComponent: return "uncolourable-component";
    case ErrorKind::FallbackInfeasible: return "fallback-infeasible";
    case ErrorKind::InfeasibleSize: return "infeasible-size";
    case ErrorKind::EmptySupport: return "empty-support";
    case ErrorKind::InitFailed: return "init-failed";
    case ErrorKind::Io: return "io";
    case ErrorKind::Parse: return "parse";
    }
    return "unknown";
}

}  // namespace colcount
