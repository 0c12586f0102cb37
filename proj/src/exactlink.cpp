#include "linkcob/exactlink.hpp"

#include "linkcob/errors.hpp"

namespace linkcob::exactlink {

SeifertHomologyData::SeifertHomologyData(FgAbelianGroup hn_k, FgAbelianGroup hn_f,
                                         FgAbelianGroup hn_fk, FgAbelianGroup hn1_k,
                                         IntMatrix alpha, IntMatrix beta, IntMatrix boundary)
    : alpha_(hn_k, hn_f, std::move(alpha)),
      beta_(hn_f, hn_fk, std::move(beta)),
      boundary_(hn_fk, std::move(hn1_k), std::move(boundary)) {
    if (!hn_k.is_free() || !hn_f.is_free() || !hn_fk.is_free())
        throw DomainError(
            "SeifertHomologyData: H_n(K) and the torsion-free quotients must be free");
}

ExactnessReport is_exact_surface(const SeifertHomologyData& data) {
    ExactnessReport r;
    r.position_ok[0] = data.alpha().is_injective();
    r.position_ok[1] = abgroup::is_exact_at(data.alpha(), data.beta());
    r.position_ok[2] = abgroup::is_exact_at(data.beta(), data.boundary());
    r.position_ok[3] = data.boundary().is_surjective();
    r.exact = r.position_ok[0] && r.position_ok[1] && r.position_ok[2] && r.position_ok[3];
    for (int i = 0; i < 4; ++i)
        if (!r.position_ok[i]) {
            r.first_failure = i + 1;
            break;
        }
    return r;
}

SeifertHomologyData data_from_form(const BilinearForm& a) {
    std::size_t m = a.rank();
    IntMatrix adj = forms::adjoint_matrix(forms::symmetrize(a));
    zlattice::Submodule ker = zlattice::kernel_basis(adj);
    zlattice::CokernelDecomposition cok = zlattice::cokernel(adj);
    FgAbelianGroup hn_k = FgAbelianGroup::free(ker.rank());
    FgAbelianGroup hn_f = FgAbelianGroup::free(m);
    FgAbelianGroup hn_fk = FgAbelianGroup::free(m);
    FgAbelianGroup hn1_k = FgAbelianGroup::from_cokernel(cok);
    return SeifertHomologyData(hn_k, hn_f, hn_fk, hn1_k, ker.basis().transpose(), adj,
                               cok.quotient_matrix());
}

std::vector<std::string> fixture_names() {
    return {"F0-product", "F1-product", "sphere-knot", "simple-link", "fibered-fiber"};
}

SeifertHomologyData fixture(const std::string& name) {
    FgAbelianGroup z = FgAbelianGroup::free(1);
    FgAbelianGroup zero = FgAbelianGroup::trivial();
    if (name == "F0-product") {
        // K = S^{n-1} x S^n bounds F0 = D^n x S^n: Z -> Z -> Z -> Z with an
        // isomorphism, the zero map, then an isomorphism.
        return SeifertHomologyData(z, z, z, z, IntMatrix{{1}}, IntMatrix{{0}}, IntMatrix{{1}});
    }
    if (name == "F1-product") {
        // Same K, other side F1 = S^{n-1} x D^{n+1}: H_n(F1) vanishes, so the
        // first map cannot be injective.
        return SeifertHomologyData(z, zero, zero, z, IntMatrix(0, 1), IntMatrix(0, 0),
                                   IntMatrix(1, 0));
    }
    if (name == "sphere-knot") {
        // Spherical boundary: both end groups vanish and the middle map is an
        // isomorphism, so every Seifert surface is exact.
        return SeifertHomologyData(zero, z, z, zero, IntMatrix(1, 0), IntMatrix{{1}},
                                   IntMatrix(0, 1));
    }
    if (name == "simple-link") {
        return data_from_form(BilinearForm(IntMatrix{{-1, 1}, {0, -1}}, 1));
    }
    if (name == "fibered-fiber") {
        // Unimodular intersection form: Alexander duality for a fiber forces
        // equal middle ranks, realized here by a hyperbolic pairing.
        return data_from_form(BilinearForm(IntMatrix{{0, 1}, {0, 0}}, 1));
    }
    throw DomainError("fixture: unknown name '" + name + "'");
}

}  // namespace linkcob::exactlink
