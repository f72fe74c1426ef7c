#include "ubb/basis_builder.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace ubb {

namespace {

const TripartiteState& seed_state(const TOPB& basis, int face, int layer) {
    // The (0,0) member built from the two all-ones window vectors.
    return basis.face_states.at({face, layer}).front();
}

TripartiteState combine(const TripartiteState& a, const Rational& ca,
                        const TripartiteState& b, const Rational& cb, std::string label) {
    TripartiteState s;
    s.d = a.d;
    s.label = std::move(label);
    s.coeffs.resize(a.coeffs.size());
    for (size_t i = 0; i < s.coeffs.size(); ++i)
        s.coeffs[i] = ca * a.coeffs[i] + cb * b.coeffs[i];
    return s;
}

void verify_orthogonal(const std::vector<TripartiteState>& states, const char* what) {
    for (size_t i = 0; i < states.size(); ++i)
        for (size_t j = i + 1; j < states.size(); ++j)
            if (!dot(states[i].coeffs, states[j].coeffs).is_zero())
                throw std::logic_error(std::string(what) + ": states '" + states[i].label +
                                       "' and '" + states[j].label + "' are not orthogonal");
}

constexpr std::array<std::pair<int, int>, 3> kSymmetricPairs = {{{1, 2}, {3, 4}, {5, 6}}};

std::string pair_label(const char* op, int face_a, int face_b, int layer) {
    std::ostringstream os;
    os << op << "(f" << face_a << ",f" << face_b << ")l" << layer;
    return os.str();
}

}  // namespace

int single_party(Bipartition cut) {
    switch (cut) {
        case Bipartition::A_BC: return 0;
        case Bipartition::AC_B: return 1;
        case Bipartition::AB_C: return 2;
    }
    throw std::logic_error("single_party: bad cut");
}

std::string to_string(Bipartition cut) {
    switch (cut) {
        case Bipartition::A_BC: return "A|BC";
        case Bipartition::AC_B: return "AC|B";
        case Bipartition::AB_C: return "AB|C";
    }
    throw std::logic_error("to_string: bad cut");
}

std::optional<Bipartition> parse_bipartition(const std::string& text) {
    if (text == "A|BC") return Bipartition::A_BC;
    if (text == "AC|B") return Bipartition::AC_B;
    if (text == "AB|C") return Bipartition::AB_C;
    return std::nullopt;
}

std::string to_string(BasisKind kind) {
    switch (kind) {
        case BasisKind::topb: return "topb";
        case BasisKind::upb: return "upb";
        case BasisKind::ubb_sym: return "ubb-sym";
        case BasisKind::ubb_asym: return "ubb-asym";
    }
    throw std::logic_error("to_string: bad kind");
}

TripartiteState stopper_state(int d) {
    TripartiteState s;
    s.d = d;
    s.label = "S";
    RationalVector ones(d, Rational(1));
    s.coeffs = tensor_product(tensor_product(ones, ones), ones);
    return s;
}

BasisSet build_full_topb(int d, CompletionScheme scheme) {
    BasisSet set;
    set.d = d;
    set.kind = BasisKind::topb;
    set.scheme = scheme;
    set.states = build_topb(d, scheme).all();
    verify_orthogonal(set.states, "topb");
    return set;
}

BasisSet build_upb(int d, CompletionScheme scheme) {
    const TOPB basis = build_topb(d, scheme);
    BasisSet set;
    set.d = d;
    set.kind = BasisKind::upb;
    set.scheme = scheme;
    for (int layer = 1; layer <= layer_count(d); ++layer)
        for (int face = 1; face <= 6; ++face) {
            const auto& states = basis.face_states.at({face, layer});
            // Skip the (0,0) seed; it overlaps |S>.
            set.states.insert(set.states.end(), states.begin() + 1, states.end());
        }
    for (const TripartiteState& s : basis.inner_cube_states)
        if (s.label != "core(+++)") set.states.push_back(s);
    set.states.push_back(stopper_state(d));
    verify_orthogonal(set.states, "upb");
    return set;
}

BasisSet build_symmetric_ubb(int d, CompletionScheme scheme) {
    const TOPB basis = build_topb(d, scheme);
    BasisSet set = build_upb(d, scheme);
    set.kind = BasisKind::ubb_sym;
    for (int layer = 1; layer <= layer_count(d); ++layer)
        for (const auto& [fa, fb] : kSymmetricPairs) {
            set.states.push_back(combine(seed_state(basis, fa, layer), Rational(1),
                                         seed_state(basis, fb, layer), Rational(-1),
                                         pair_label("minus", fa, fb, layer)));
        }
    verify_orthogonal(set.states, "ubb-sym");
    return set;
}

BasisSet build_asymmetric_ubb(int d, Bipartition cut, CompletionScheme scheme) {
    const TOPB basis = build_topb(d, scheme);
    const TripartiteState stopper = stopper_state(d);
    const int sigma = single_party(cut);
    BasisSet set = build_upb(d, scheme);
    set.kind = BasisKind::ubb_asym;
    set.cut = cut;
    for (int layer = 1; layer <= layer_count(d); ++layer) {
        const LayerGeometry geom = layer_geometry(d, layer);
        // Faces whose sigma slot carries the same window family pair up into
        // difference states separable across the cut; the two faces with a
        // fixed sigma level pair with the matching diagonal state instead.
        std::vector<int> eta_faces, xi_faces;
        std::vector<std::pair<int, int>> anchored;  // (level, face)
        for (int face = 1; face <= 6; ++face) {
            switch (face_pattern(d, face)[sigma]) {
                case Slot::eta: eta_faces.push_back(face); break;
                case Slot::xi: xi_faces.push_back(face); break;
                case Slot::lo: anchored.push_back({geom.level_lo, face}); break;
                case Slot::hi: anchored.push_back({geom.level_hi, face}); break;
            }
        }
        std::vector<std::pair<int, int>> pairs = {{eta_faces[0], eta_faces[1]},
                                                  {xi_faces[0], xi_faces[1]}};
        std::sort(pairs.begin(), pairs.end());
        for (const auto& [fa, fb] : pairs)
            set.states.push_back(combine(seed_state(basis, fa, layer), Rational(1),
                                         seed_state(basis, fb, layer), Rational(-1),
                                         pair_label("minus", fa, fb, layer)));
        std::sort(anchored.begin(), anchored.end());
        for (const auto& [level, face] : anchored) {
            TripartiteState diag;
            diag.d = d;
            RationalVector e(d);
            e[level] = Rational(1);
            diag.coeffs = tensor_product(tensor_product(e, e), e);
            const TripartiteState& seed = seed_state(basis, face, layer);
            const Rational c = dot(stopper.coeffs, seed.coeffs);
            std::ostringstream label;
            label << "anchor(k" << level << ",f" << face << ")l" << layer;
            set.states.push_back(combine(diag, c, seed, Rational(-1), label.str()));
        }
    }
    verify_orthogonal(set.states, "ubb-asym");
    return set;
}

MissingStateSet missing_state_set(int d, CompletionScheme scheme) {
    const TOPB basis = build_topb(d, scheme);
    MissingStateSet m;
    m.d = d;
    m.states = basis.diagonal_states;
    for (const TripartiteState& s : basis.inner_cube_states)
        if (s.label == "core(+++)") m.states.push_back(s);
    for (int layer = 1; layer <= layer_count(d); ++layer)
        for (const auto& [fa, fb] : kSymmetricPairs)
            m.states.push_back(combine(seed_state(basis, fa, layer), Rational(1),
                                       seed_state(basis, fb, layer), Rational(1),
                                       pair_label("plus", fa, fb, layer)));
    verify_orthogonal(m.states, "missing states");
    return m;
}

BasisSet build_basis(int d, BasisKind kind, std::optional<Bipartition> cut,
                     CompletionScheme scheme) {
    if (kind == BasisKind::ubb_asym) {
        if (!cut) throw std::invalid_argument("build_basis: ubb-asym requires a cut");
        return build_asymmetric_ubb(d, *cut, scheme);
    }
    if (cut) throw std::invalid_argument("build_basis: cut is only valid for ubb-asym");
    switch (kind) {
        case BasisKind::topb: return build_full_topb(d, scheme);
        case BasisKind::upb: return build_upb(d, scheme);
        case BasisKind::ubb_sym: return build_symmetric_ubb(d, scheme);
        default: throw std::logic_error("build_basis: bad kind");
    }
}

}  // namespace ubb
