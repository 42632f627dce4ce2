#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "kgraph/algebra.hpp"
#include "kgraph/check.hpp"
#include "kgraph/graph.hpp"

namespace kgraph {

// Everything here is parametrised by a distinguished colour i.  The context
// bundles the graph together with the colour-i-deleted graph and the edge
// index translation between the two, so callers don't rebuild it per call.
struct ColorContext {
    KGraph full;
    int color = 0;  // 1-based
    KGraph sub;     // full with colour `color` deleted
    std::vector<int> edge_to_sub;    // full edge index -> sub edge index, -1 for colour-i edges
    std::vector<int> edge_from_sub;  // sub edge index -> full edge index
};

ColorContext make_color_context(const KGraph& g, int color);

// Path translation along the inclusion of the colour-deleted graph.
Path path_to_sub(const ColorContext& ctx, const Path& p);
Path path_from_sub(const ColorContext& ctx, const Path& p);

enum class Level { toeplitz, ck };

// phi: the degree-zero embedding, as a relabelling of monomials.  At the CK
// level the embedding only descends to the quotients when the graph is
// locally convex, so that level refuses otherwise.
AlgebraElement phi_apply(const ColorContext& ctx, const AlgebraElement& a,
                         Level level = Level::toeplitz);
AlgebraElement phi_inverse(const ColorContext& ctx, const AlgebraElement& a);

// An element of X_n: a full-graph element whose monomials (lambda, mu) all
// have d(lambda) equal to n in the distinguished colour and d(mu) zero there.
struct BimoduleElement {
    int n = 0;
    AlgebraElement value;
};

BimoduleElement make_bimodule_element(const ColorContext& ctx, int n,
                                      const AlgebraElement& value);

// All monomial generators of X_n with path degrees bounded by cap.
std::vector<BimoduleElement> x_generators(const ColorContext& ctx, int n,
                                          const Degree& cap);

BimoduleElement bim_add(const ColorContext& ctx, const BimoduleElement& x,
                        const BimoduleElement& y);
BimoduleElement bim_scale(const Rational& c, const BimoduleElement& x);

// <x, y> = phi^{-1}(x^* y), an element of the colour-deleted algebra.
AlgebraElement inner_product(const ColorContext& ctx, const BimoduleElement& x,
                             const BimoduleElement& y);

BimoduleElement act_left(const ColorContext& ctx, const AlgebraElement& a,
                         const BimoduleElement& x);
BimoduleElement act_right(const ColorContext& ctx, const BimoduleElement& x,
                          const AlgebraElement& a);

// Elements of the n-fold balanced tensor power of X_1.  Length 0 holds a
// scalar from the colour-deleted algebra; length >= 1 holds combinations of
// elementary tensors whose factors are X_1 monomials.
struct TensorElement {
    int len = 0;
    std::uint64_t graph_uid = 0;
    AlgebraElement scalar;                            // used when len == 0
    std::map<std::vector<Monomial>, Rational> terms;  // used when len >= 1

    bool is_zero() const { return len == 0 ? scalar.is_zero() : terms.empty(); }
};

TensorElement tensor_concat(const ColorContext& ctx, const TensorElement& s,
                            const TensorElement& t);

// Omega_n sends an X_n monomial to the tensor power, peeling one colour-i
// edge off the front at a time.  Omega_0 is phi^{-1} and Omega_1 keeps the
// monomial as a length-1 tensor.
TensorElement omega(const ColorContext& ctx, int n, const Monomial& mono);

// <x1 x ... x xm, y1 x ... x ym> computed by the inductive balanced formula
// <x (x) u, y (x) w> = <u, <x,y> . w>.
AlgebraElement tensor_inner_product(const ColorContext& ctx,
                                    const TensorElement& s,
                                    const TensorElement& t);

// Gram-matrix comparison: Omega_{m+n} against Omega_m (x) Omega_n on all
// monomial generators, paired against every X_{m+n} generator.
CheckReport verify_omega_multiplicativity(const ColorContext& ctx, int m, int n,
                                          const Degree& cap);

// Representation axioms for (embedding, phi) acting on X_1 generators.
CheckReport check_toeplitz_axioms(const ColorContext& ctx, Level level);

// Whether every x y^* with x, y ranging over the X_1 generators lies in the
// span of the degree-zero monomials together with the CK ideal.
bool xxstar_in_phi_image(const ColorContext& ctx);

}  // namespace kgraph
