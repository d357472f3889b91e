#include "sylvres/condition.hpp"

#include <stdexcept>

namespace sylvres {

IdealBasis condition_for_Sx(const IdealBasis& I, Fq alpha) {
    return IdealBasis(I.a().shift_y(alpha).rev_y(I.ea()), I.b().shift_y(alpha).rev_y(I.eb()));
}

std::pair<IdealBasis, ConditioningRecord> condition_for_both(const IdealBasis& I, Fq alpha, Fq beta) {
    IdealBasis J = condition_for_Sx(I, alpha);
    ConditioningRecord rec;
    rec.alpha = alpha;
    rec.beta = beta;
    rec.ea = I.ea();
    rec.eb = I.eb();
    rec.da = I.da();
    rec.db = I.db();
    rec.y_stage = true;
    rec.x_stage = true;
    IdealBasis K(J.a().shift_x(beta).rev_x(I.da()), J.b().shift_x(beta).rev_x(I.db()));
    return {std::move(K), rec};
}

bool same_degrees(const IdealBasis& I, const IdealBasis& J) {
    return I.da() == J.da() && I.db() == J.db() && I.ea() == J.ea() && I.eb() == J.eb();
}

UPoly recover_last_invariant(const UPoly& sigma, const ConditioningRecord& rec) {
    if (sigma.is_zero()) throw std::invalid_argument("cannot recover from the zero polynomial");
    if (!rec.x_stage) return sigma.monic();
    UPoly s = strip_x_power(sigma).first;
    return taylor_shift(rev(s), sigma.ctx().neg(rec.beta)).monic();
}

}  // namespace sylvres
