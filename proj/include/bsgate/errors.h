#ifndef BSGATE_ERRORS_H
#define BSGATE_ERRORS_H

#include <stdexcept>
#include <string>

namespace bsgate {

/// A matrix that is supposed to be orthogonal (a lossless network) is not.
struct ConsistencyError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A linear map sent an occupation vector outside the one-photon-per-pair basis.
struct NotRepresentable : std::domain_error {
    using std::domain_error::domain_error;
};

struct UnsupportedSize : std::length_error {
    using std::length_error::length_error;
};

}  // namespace bsgate

#endif
