#include "ubb/block_cube.hpp"

#include <algorithm>
#include <array>
#include <sstream>
#include <stdexcept>

#include "ubb/linalg.hpp"

namespace ubb {

namespace {

void require_layer(int d, int layer) {
    if (d < 3) throw std::invalid_argument("block_cube: d must be at least 3");
    if (layer < 1 || layer > layer_count(d))
        throw std::invalid_argument("block_cube: layer out of range");
}

RationalVector unit_vector(int d, int k) {
    RationalVector v(d);
    v[k] = Rational(1);
    return v;
}

LocalFamily window_family(FamilyKind kind, int d, int layer, int begin, int end,
                          CompletionScheme scheme) {
    std::vector<RationalVector> seed;
    RationalVector ones(d);
    for (int k = begin; k < end; ++k) ones[k] = Rational(1);
    seed.push_back(ones);
    if (scheme == CompletionScheme::standard) {
        for (int k = begin; k + 1 < end; ++k) seed.push_back(unit_vector(d, k));
    } else {
        for (int k = end - 1; k > begin; --k) seed.push_back(unit_vector(d, k));
    }
    LocalFamily fam;
    fam.kind = kind;
    fam.layer = layer;
    fam.window_begin = begin;
    fam.window_end = end;
    fam.vectors = orthogonalize(seed);
    return fam;
}

std::string face_label(int face, int layer, int i, int j) {
    std::ostringstream os;
    os << "f" << face << "l" << layer << "(" << i << "," << j << ")";
    return os.str();
}

}  // namespace

std::vector<BasicBlock> TripartiteState::support() const {
    std::vector<BasicBlock> blocks;
    for (int p = 0; p < d; ++p)
        for (int q = 0; q < d; ++q)
            for (int r = 0; r < d; ++r)
                if (!coeffs[(p * d + q) * d + r].is_zero()) blocks.push_back({p, q, r});
    return blocks;
}

std::vector<TripartiteState> TOPB::all() const {
    std::vector<TripartiteState> out = diagonal_states;
    out.insert(out.end(), inner_cube_states.begin(), inner_cube_states.end());
    for (int layer = 1; layer <= layer_count(d); ++layer)
        for (int face = 1; face <= 6; ++face) {
            const auto& states = face_states.at({face, layer});
            out.insert(out.end(), states.begin(), states.end());
        }
    return out;
}

size_t TOPB::size() const {
    size_t n = diagonal_states.size() + inner_cube_states.size();
    for (const auto& [key, states] : face_states) n += states.size();
    return n;
}

int layer_count(int d) {
    if (d < 3) throw std::invalid_argument("block_cube: d must be at least 3");
    return d % 2 == 1 ? (d - 1) / 2 : d / 2 - 1;
}

LayerGeometry layer_geometry(int d, int layer) {
    require_layer(d, layer);
    LayerGeometry g;
    if (d % 2 == 1) {
        const int m = (d - 1) / 2;
        g.level_lo = m - layer;
        g.level_hi = m + layer;
        g.eta_begin = m - layer;
        g.eta_end = m + layer;
        g.xi_begin = m - layer + 1;
        g.xi_end = m + layer + 1;
        g.family_size = 2 * layer;
    } else {
        g.level_lo = d / 2 - 1 - layer;
        g.level_hi = d / 2 + layer;
        g.eta_begin = d / 2 - 1 - layer;
        g.eta_end = d / 2 + layer;
        g.xi_begin = d / 2 - layer;
        g.xi_end = d / 2 + layer + 1;
        g.family_size = 2 * layer + 1;
    }
    return g;
}

std::array<Slot, 3> face_pattern(int d, int face) {
    if (face < 1 || face > 6) throw std::invalid_argument("block_cube: face out of range");
    using S = Slot;
    // Shared template; the d=4 cube permutes which face index carries which
    // pattern, matching its printed arrangement.
    static constexpr std::array<std::array<S, 3>, 6> generic = {{
        {S::lo, S::eta, S::xi},
        {S::eta, S::hi, S::xi},
        {S::hi, S::xi, S::eta},
        {S::eta, S::xi, S::lo},
        {S::xi, S::lo, S::eta},
        {S::xi, S::eta, S::hi},
    }};
    static constexpr std::array<std::array<S, 3>, 6> dim4 = {{
        {S::lo, S::eta, S::xi},
        {S::eta, S::hi, S::xi},
        {S::xi, S::lo, S::eta},
        {S::xi, S::eta, S::hi},
        {S::hi, S::xi, S::eta},
        {S::eta, S::xi, S::lo},
    }};
    return d == 4 ? dim4[face - 1] : generic[face - 1];
}

LocalFamily eta_family(int d, int layer, CompletionScheme scheme) {
    const LayerGeometry g = layer_geometry(d, layer);
    return window_family(FamilyKind::eta, d, layer, g.eta_begin, g.eta_end, scheme);
}

LocalFamily xi_family(int d, int layer, CompletionScheme scheme) {
    const LayerGeometry g = layer_geometry(d, layer);
    return window_family(FamilyKind::xi, d, layer, g.xi_begin, g.xi_end, scheme);
}

LocalFamily phi_family(int d) {
    if (d < 4 || d % 2 != 0)
        throw std::invalid_argument("block_cube: phi family exists for even d only");
    RationalVector plus(d), minus(d);
    plus[d / 2 - 1] = Rational(1);
    plus[d / 2] = Rational(1);
    minus[d / 2 - 1] = Rational(1);
    minus[d / 2] = Rational(-1);
    LocalFamily fam;
    fam.kind = FamilyKind::phi;
    fam.layer = 0;
    fam.window_begin = d / 2 - 1;
    fam.window_end = d / 2 + 1;
    fam.vectors = {plus, minus};
    return fam;
}

TOPB build_topb(int d, CompletionScheme scheme) {
    if (d < 3) throw std::invalid_argument("block_cube: d must be at least 3");
    TOPB basis;
    basis.d = d;
    basis.scheme = scheme;

    for (int k = 0; k < d; ++k) {
        if (d % 2 == 0 && (k == d / 2 - 1 || k == d / 2)) continue;
        TripartiteState s;
        s.d = d;
        s.label = "diag(" + std::to_string(k) + ")";
        const RationalVector e = unit_vector(d, k);
        s.coeffs = tensor_product(tensor_product(e, e), e);
        basis.diagonal_states.push_back(std::move(s));
    }

    if (d % 2 == 0) {
        const LocalFamily phi = phi_family(d);
        for (int a = 0; a < 2; ++a)
            for (int b = 0; b < 2; ++b)
                for (int c = 0; c < 2; ++c) {
                    TripartiteState s;
                    s.d = d;
                    s.label = std::string("core(") + (a ? '-' : '+') + (b ? '-' : '+') +
                              (c ? '-' : '+') + ")";
                    s.coeffs = tensor_product(
                        tensor_product(phi.vectors[a], phi.vectors[b]), phi.vectors[c]);
                    basis.inner_cube_states.push_back(std::move(s));
                }
    }

    for (int layer = 1; layer <= layer_count(d); ++layer) {
        const LayerGeometry g = layer_geometry(d, layer);
        const LocalFamily eta = eta_family(d, layer, scheme);
        const LocalFamily xi = xi_family(d, layer, scheme);
        const RationalVector lo = unit_vector(d, g.level_lo);
        const RationalVector hi = unit_vector(d, g.level_hi);
        for (int face = 1; face <= 6; ++face) {
            const std::array<Slot, 3> pat = face_pattern(d, face);
            std::vector<TripartiteState> states;
            for (int i = 0; i < g.family_size; ++i)
                for (int j = 0; j < g.family_size; ++j) {
                    std::array<const RationalVector*, 3> factor{};
                    for (int slot = 0; slot < 3; ++slot) {
                        switch (pat[slot]) {
                            case Slot::lo: factor[slot] = &lo; break;
                            case Slot::hi: factor[slot] = &hi; break;
                            case Slot::eta: factor[slot] = &eta.vectors[i]; break;
                            case Slot::xi: factor[slot] = &xi.vectors[j]; break;
                        }
                    }
                    TripartiteState s;
                    s.d = d;
                    s.label = face_label(face, layer, i, j);
                    s.coeffs = tensor_product(tensor_product(*factor[0], *factor[1]), *factor[2]);
                    states.push_back(std::move(s));
                }
            basis.face_states[{face, layer}] = std::move(states);
        }
    }
    return basis;
}

std::string occupancy_diagram(const TOPB& basis) {
    const int d = basis.d;
    // Owner tag per cell: 'D' diagonal, '0' inner cube, '1'..'6' faces.
    std::vector<std::vector<std::vector<char>>> owner(
        d, std::vector<std::vector<char>>(d, std::vector<char>(d, '.')));
    auto mark = [&](const TripartiteState& s, char tag) {
        for (const BasicBlock& b : s.support()) owner[b.p][b.q][b.r] = tag;
    };
    for (const auto& s : basis.diagonal_states) mark(s, 'D');
    for (const auto& s : basis.inner_cube_states) mark(s, '0');
    for (const auto& [key, states] : basis.face_states)
        for (const auto& s : states) mark(s, static_cast<char>('0' + key.first));

    std::ostringstream os;
    os << "block occupancy, one B x C grid per A level (D diagonal, 0 inner cube, 1-6 faces)\n";
    for (int p = 0; p < d; ++p) {
        os << "A=" << p << "\n";
        for (int q = 0; q < d; ++q) {
            os << "  ";
            for (int r = 0; r < d; ++r) os << owner[p][q][r] << (r + 1 < d ? " " : "");
            os << "\n";
        }
    }
    return os.str();
}

}  // namespace ubb
