#include "leibniz/classification.hpp"

#include "leibniz/forms.hpp"
#include "leibniz/structure.hpp"

namespace leibniz {

static Verdict from_check(const IdentityCheck& c) {
    return {c.holds, c.witness};
}

// verdict for "identity A and identity B both hold"; the witness is taken
// from whichever failed first
static Verdict both(const Verdict& a, const Verdict& b) {
    if (!a.holds) return a;
    if (!b.holds) return b;
    return {true, std::nullopt};
}

ClassificationReport classify(const AlgebraTable& a) {
    ClassificationReport r;
    r.right_leibniz = from_check(is_right_leibniz(a));
    r.left_leibniz = from_check(is_left_leibniz(a));
    r.symmetric = both(r.right_leibniz, r.left_leibniz);
    r.lie = both(r.right_leibniz, from_check(is_antisymmetric(a)));
    r.left_central = both(r.left_leibniz, from_check(is_left_central(a)));
    r.right_central = both(r.right_leibniz, from_check(is_right_central(a)));

    r.solvable = is_solvable(a);
    r.nilpotent = is_nilpotent(a);

    if (r.right_leibniz.holds) {
        KillingClassCheck kc = is_killing_class(a);
        if (kc.holds) {
            r.killing_class = {true, std::nullopt};
        } else {
            r.killing_class =
                Verdict{false, std::vector<std::size_t>{kc.witness->first,
                                                        kc.witness->second}};
        }
        r.semisimple = is_semisimple(a);
    } else {
        // the Killing-class and semisimplicity notions presuppose the right
        // identity; report false without witnesses
        r.killing_class = {false, std::nullopt};
        r.semisimple = false;
    }
    return r;
}

}  // namespace leibniz
