#include "gcplane/number.hpp"

namespace gcp {

GCNum inverse(GCNum z, PlaneParam pl) {
    if (is_null(z, pl))
        throw Error(ErrorCode::NullDivisor, "no inverse on the null cone of C_p");
    const double q = quad(z, pl);
    return {z.x / q, -z.y / q};
}

} // namespace gcp
