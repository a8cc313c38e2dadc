#pragma once

#include <stdexcept>
#include <string>

namespace ppv {

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

#define PPV_DEFINE_ERROR(Name)                                        \
    struct Name : Error {                                             \
        explicit Name(const std::string& msg) : Error(#Name ": " + msg) {} \
    }

PPV_DEFINE_ERROR(LoopEdge);
PPV_DEFINE_ERROR(NotFiniteType);
PPV_DEFINE_ERROR(NotDominant);
PPV_DEFINE_ERROR(CapExceeded);
PPV_DEFINE_ERROR(RelationViolated);
PPV_DEFINE_ERROR(NotNilpotent);
PPV_DEFINE_ERROR(FieldMismatch);
PPV_DEFINE_ERROR(NotStable);
PPV_DEFINE_ERROR(CatalogMissing);
PPV_DEFINE_ERROR(DecompositionFailed);
PPV_DEFINE_ERROR(LiftMismatch);
PPV_DEFINE_ERROR(NonPolynomialCount);
PPV_DEFINE_ERROR(ClassMatchFailure);
PPV_DEFINE_ERROR(NoEmbedding);
PPV_DEFINE_ERROR(DimMismatch);
PPV_DEFINE_ERROR(NotInSpan);
PPV_DEFINE_ERROR(RankDeficient);
PPV_DEFINE_ERROR(TooLarge);
PPV_DEFINE_ERROR(ConfigError);

#undef PPV_DEFINE_ERROR

}  // namespace ppv
