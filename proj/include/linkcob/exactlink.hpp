#pragma once

#include "linkcob/forms.hpp"

#include <string>
#include <vector>

namespace linkcob::exactlink {

using abgroup::FgAbelianGroup;
using abgroup::GroupHom;
using forms::BilinearForm;

// Homological shadow of a Seifert surface: the four groups and three maps of
//   0 -> H_n(K) -> H_n(F)/Tors -> H_n(F,K)/Tors -> H_{n-1}(K) -> 0.
// The first three groups are torsion free by construction (the boundary K is
// (n-2)-connected and the middle groups are taken mod torsion); data that
// breaks freeness, map shapes, or well-definedness is rejected here, at
// construction, not at exactness-checking time.
class SeifertHomologyData {
public:
    SeifertHomologyData(FgAbelianGroup hn_k, FgAbelianGroup hn_f, FgAbelianGroup hn_fk,
                        FgAbelianGroup hn1_k, IntMatrix alpha, IntMatrix beta, IntMatrix boundary);

    const FgAbelianGroup& hn_k() const { return alpha_.source(); }
    const FgAbelianGroup& hn_f() const { return alpha_.target(); }
    const FgAbelianGroup& hn_fk() const { return beta_.target(); }
    const FgAbelianGroup& hn1_k() const { return boundary_.target(); }
    const GroupHom& alpha() const { return alpha_; }
    const GroupHom& beta() const { return beta_; }
    const GroupHom& boundary() const { return boundary_; }

private:
    GroupHom alpha_;
    GroupHom beta_;
    GroupHom boundary_;
};

// Position 1 = injectivity of alpha, 2 = exactness at H_n(F)/Tors,
// 3 = exactness at H_n(F,K)/Tors, 4 = surjectivity of the boundary map.
struct ExactnessReport {
    bool exact = false;
    int first_failure = 0;  // 0 when exact, else 1..4
    bool position_ok[4] = {false, false, false, false};
};

ExactnessReport is_exact_surface(const SeifertHomologyData& data);

// The canonical exact data realized by a form: kernel inclusion, adjoint,
// cokernel projection.  is_exact_surface holds on every output.
SeifertHomologyData data_from_form(const BilinearForm& a);

// Named fixtures:
//   F0-product    the exact Seifert surface D^n x S^n of S^{n-1} x S^n
//   F1-product    the inexact one, S^{n-1} x D^{n+1} (alpha not injective)
//   sphere-knot   trivial boundary homology, beta an isomorphism
//   simple-link   realized from a Seifert matrix with torsion cokernel
//   fibered-fiber unimodular intersection form, equal middle ranks
std::vector<std::string> fixture_names();
SeifertHomologyData fixture(const std::string& name);

}  // namespace linkcob::exactlink
