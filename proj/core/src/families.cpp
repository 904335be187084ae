#include "unipoly/families.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <tuple>

namespace unipoly {

std::string_view to_string(FamilyTag tag) noexcept
{
    switch (tag) {
    case FamilyTag::B1: return "B1";
    case FamilyTag::B2: return "B2";
    case FamilyTag::B3: return "B3";
    case FamilyTag::C: return "C";
    case FamilyTag::D: return "D";
    case FamilyTag::EXC: return "EXC";
    }
    return "?";
}

std::optional<FamilyTag> parse_family_tag(std::string_view text)
{
    for (auto tag : {FamilyTag::B1, FamilyTag::B2, FamilyTag::B3, FamilyTag::C, FamilyTag::D, FamilyTag::EXC})
        if (text == to_string(tag))
            return tag;
    return std::nullopt;
}

std::string_view to_string(Scope scope) noexcept
{
    switch (scope) {
    case Scope::InScope: return "IN_SCOPE";
    case Scope::OutOfScopeA: return "OUT_OF_SCOPE_A";
    case Scope::OutOfScopeP: return "OUT_OF_SCOPE_P";
    case Scope::Infeasible: return "INFEASIBLE";
    }
    return "?";
}

FamilySpec make_family_spec(FamilyTag tag, int p, int x, int a)
{
    FamilySpec s{tag, p, 0, 0};
    switch (tag) {
    case FamilyTag::B1: s.x = x; s.a = 3; break;
    case FamilyTag::B2: s.a = 4; break;
    case FamilyTag::B3: s.a = 5; break;
    case FamilyTag::C: s.x = x; s.a = a; break;
    case FamilyTag::D: s.a = 3; break;
    case FamilyTag::EXC:
        s.a = 5;
        if (s.p == 0)
            s.p = 15;
        break;
    }
    return s;
}

std::optional<std::string> spec_violation(const FamilySpec& s)
{
    const int p = s.p;
    switch (s.tag) {
    case FamilyTag::B1:
        if (s.a != 3)
            return "B1 requires a = 3";
        if (p < 10)
            return "B1 requires p >= 10";
        if (s.x < 3)
            return "B1 requires x >= 3";
        if (s.x > (p - 4) / 2)
            return "B1 requires x <= floor((p-4)/2)";
        return std::nullopt;
    case FamilyTag::B2:
        if (s.a != 4)
            return "B2 requires a = 4";
        if (p < 15)
            return "B2 requires p >= 15";
        if (p % 4 != 3)
            return "B2 requires p = 3 (mod 4)";
        return std::nullopt;
    case FamilyTag::B3:
        if (s.a != 5)
            return "B3 requires a = 5";
        if (p < 22)
            return "B3 requires p >= 22";
        if (p % 5 != 2)
            return "B3 requires p = 2 (mod 5)";
        return std::nullopt;
    case FamilyTag::C:
        if (p < 8)
            return "C requires p >= 8";
        if (s.a < 3)
            return "C requires a >= 3";
        if (3 * s.a > p)
            return "C requires a <= p/3";
        if (s.x % 2 == 0)
            return "C requires x odd";
        if (s.x < 1 + 2 * ((s.a - 1) / 2))
            return "C requires x >= 1 + 2*ceil((a-2)/2)";
        if (s.x > 2 * s.a - 3)
            return "C requires x <= 2a - 3";
        return std::nullopt;
    case FamilyTag::D:
        if (s.a != 3)
            return "D requires a = 3";
        if (p < 12)
            return "D requires p >= 12";
        if (p % 4 != 0)
            return "D requires p = 0 (mod 4)";
        return std::nullopt;
    case FamilyTag::EXC:
        if (p != 15)
            return "EXC requires p = 15";
        if (s.a != 5)
            return "EXC requires a = 5";
        return std::nullopt;
    }
    return "unknown family";
}

namespace {

void require_valid(const FamilySpec& spec)
{
    if (auto v = spec_violation(spec))
        throw std::invalid_argument(*v);
}

void append(std::vector<int>& out, int value, int count)
{
    out.insert(out.end(), static_cast<std::size_t>(std::max(count, 0)), value);
}

}  // namespace

int family_y(const FamilySpec& spec)
{
    return 2 * (spec.a - 1) - spec.x;
}

int family_path_length(const FamilySpec& spec)
{
    return spec.p - 3 * spec.a + 2;
}

DegreeSequence family_sequence(const FamilySpec& spec)
{
    require_valid(spec);
    const int p = spec.p;
    std::vector<int> d{p - 1};
    switch (spec.tag) {
    case FamilyTag::B1:
        append(d, spec.x + 3, 2);
        d.push_back(p - 1 - 2 * spec.x + 3);
        append(d, 4, p - 7);
        append(d, 3, 3);
        break;
    case FamilyTag::B2:
        append(d, (p + 1) / 4 + 3, 4);
        append(d, 4, p - 9);
        append(d, 3, 4);
        break;
    case FamilyTag::B3:
        append(d, (p + 3) / 5 + 3, 5);
        append(d, 4, p - 11);
        append(d, 3, 5);
        break;
    case FamilyTag::C:
        d.push_back(spec.x + 3);
        d.push_back(family_y(spec) + 3);
        append(d, 5, p - spec.a - 3);
        append(d, 3, spec.a);
        break;
    case FamilyTag::D:
        append(d, p / 4 + 3, 4);
        append(d, 4, p - 8);
        append(d, 3, 3);
        break;
    case FamilyTag::EXC:
        d = {14};
        append(d, 5, 9);
        append(d, 3, 5);
        break;
    }
    return DegreeSequence(std::move(d));
}

namespace {

// Every valid spec at order p, in row order.
std::vector<FamilySpec> all_specs(int p)
{
    std::vector<FamilySpec> out;
    for (int x = 3; 2 * x <= p - 4; ++x)
        out.push_back(make_family_spec(FamilyTag::B1, p, x));
    out.push_back(make_family_spec(FamilyTag::B2, p));
    out.push_back(make_family_spec(FamilyTag::B3, p));
    for (int a = 3; 3 * a <= p; ++a)
        for (int x = 1; x <= 2 * a - 3; x += 2)
            out.push_back(make_family_spec(FamilyTag::C, p, x, a));
    out.push_back(make_family_spec(FamilyTag::D, p));
    out.push_back(make_family_spec(FamilyTag::EXC, p));
    std::erase_if(out, [](const FamilySpec& s) { return spec_violation(s).has_value(); });
    return out;
}

// Places rim vertices one after another and records chords by position.
class RimBuilder {
public:
    int place() { return next_++; }
    void chord(int a, int b) { chords_.emplace_back(a, b); }
    /// An isolated rim vertex.
    void gap() { ++next_; }
    /// `count` pendant vertices joined to `hub`.
    void pendants(int hub, int count)
    {
        for (int i = 0; i < count; ++i)
            chord(hub, place());
    }
    ChordDiagram finish(int expected_rim) &&
    {
        if (next_ != expected_rim)
            throw std::logic_error("rim layout size mismatch");
        return ChordDiagram(next_, std::move(chords_));
    }

private:
    int next_ = 0;
    std::vector<Chord> chords_;
};

// Polygon core b_0..b_{k-1} with the given diagonals. Every vertex is raised
// to chord degree `target` by pendants; each boundary arc holds one isolated
// vertex followed by the pendants of the arc's first corner.
ChordDiagram polygon_with_pendants(int k, const std::vector<std::pair<int, int>>& diagonals,
                                   const std::vector<int>& targets, int rim)
{
    std::vector<int> core(static_cast<std::size_t>(k), 2);
    for (auto [i, j] : diagonals) {
        ++core[static_cast<std::size_t>(i)];
        ++core[static_cast<std::size_t>(j)];
    }
    RimBuilder rb;
    std::vector<int> pos(static_cast<std::size_t>(k));
    for (int j = 0; j < k; ++j) {
        pos[static_cast<std::size_t>(j)] = rb.place();
        rb.gap();
        rb.pendants(pos[static_cast<std::size_t>(j)], targets[static_cast<std::size_t>(j)] - core[static_cast<std::size_t>(j)]);
    }
    for (int j = 0; j < k; ++j)
        rb.chord(pos[static_cast<std::size_t>(j)], pos[static_cast<std::size_t>((j + 1) % k)]);
    for (auto [i, j] : diagonals)
        rb.chord(pos[static_cast<std::size_t>(i)], pos[static_cast<std::size_t>(j)]);
    return std::move(rb).finish(rim);
}

// Triangles (centre, s_i, t_i), i = 1..count, read backwards along the rim:
// t_count, gap, s_count, ..., t_1, gap, s_1, gap.
void bouquet_closing(RimBuilder& rb, int centre, int count)
{
    for (int i = 0; i < count; ++i) {
        int t = rb.place();
        rb.gap();
        int s = rb.place();
        rb.chord(centre, t);
        rb.chord(centre, s);
        rb.chord(s, t);
    }
    rb.gap();
}

// Same triangles read forwards after the centre: gap, s_1, gap, t_1, s_2, ...
void bouquet_opening(RimBuilder& rb, int centre, int count)
{
    rb.gap();
    for (int i = 0; i < count; ++i) {
        int s = rb.place();
        rb.gap();
        int t = rb.place();
        rb.chord(centre, s);
        rb.chord(centre, t);
        rb.chord(s, t);
    }
}

ChordDiagram construct_c(const FamilySpec& spec)
{
    const int ell = family_path_length(spec);
    const int u_triangles = (spec.x - 1) / 2;
    const int v_triangles = (family_y(spec) - 1) / 2;

    // Path u = c_0, ..., c_ell = v zigzags: even indices run forward from u,
    // odd indices come back towards u, and v's triangles sit at the turn.
    RimBuilder rb;
    std::vector<int> pos(static_cast<std::size_t>(ell + 1), -1);
    pos[0] = rb.place();
    const int last_even = ell % 2 == 0 ? ell : ell - 1;
    for (int i = 2; i <= last_even; i += 2)
        pos[static_cast<std::size_t>(i)] = rb.place();
    if (ell % 2 == 0) {
        bouquet_opening(rb, pos[static_cast<std::size_t>(ell)], v_triangles);
    } else {
        // v comes after its triangles, so build them against a reserved slot.
        std::vector<std::pair<int, int>> pending;
        for (int i = 0; i < v_triangles; ++i) {
            int t = rb.place();
            rb.gap();
            int s = rb.place();
            pending.emplace_back(s, t);
        }
        rb.gap();
        pos[static_cast<std::size_t>(ell)] = rb.place();
        for (auto [s, t] : pending) {
            rb.chord(pos[static_cast<std::size_t>(ell)], s);
            rb.chord(pos[static_cast<std::size_t>(ell)], t);
            rb.chord(s, t);
        }
    }
    const int last_odd = ell % 2 == 0 ? ell - 1 : ell - 2;
    for (int i = last_odd; i >= 1; i -= 2)
        pos[static_cast<std::size_t>(i)] = rb.place();
    bouquet_closing(rb, pos[0], u_triangles);
    for (int i = 0; i < ell; ++i)
        rb.chord(pos[static_cast<std::size_t>(i)], pos[static_cast<std::size_t>(i + 1)]);
    return std::move(rb).finish(spec.p - 1);
}

ChordDiagram construct_d(const FamilySpec& spec)
{
    // Triangle w0 w1 w2 and w1' hanging off w0; all four reach chord degree p/4.
    const int target = spec.p / 4;
    RimBuilder rb;
    const int w0 = rb.place();
    std::vector<int> hang_pendants;
    for (int i = 0; i < target - 1; ++i)
        hang_pendants.push_back(rb.place());
    rb.gap();
    const int hang = rb.place();
    for (int y : hang_pendants)
        rb.chord(hang, y);
    rb.pendants(w0, target - 3);
    const int w1 = rb.place();
    rb.gap();
    rb.pendants(w1, target - 2);
    const int w2 = rb.place();
    rb.gap();
    rb.pendants(w2, target - 2);
    rb.chord(w0, hang);
    rb.chord(w0, w1);
    rb.chord(w1, w2);
    rb.chord(w2, w0);
    return std::move(rb).finish(spec.p - 1);
}

ChordDiagram construct_exc()
{
    // Triangles nested in two arcs of the outer triangle.
    RimBuilder rb;
    const int a1 = rb.place();
    const int a2 = rb.place();
    rb.gap();
    const int b2 = rb.place();
    rb.gap();
    const int c2 = rb.place();
    const int b1 = rb.place();
    const int a3 = rb.place();
    rb.gap();
    const int b3 = rb.place();
    rb.gap();
    const int c3 = rb.place();
    const int c1 = rb.place();
    rb.gap();
    for (auto [x, y, z] : {std::tuple{a1, b1, c1}, std::tuple{a2, b2, c2}, std::tuple{a3, b3, c3}}) {
        rb.chord(x, y);
        rb.chord(y, z);
        rb.chord(x, z);
    }
    return std::move(rb).finish(14);
}

}  // namespace

ChordDiagram construct(const FamilySpec& spec)
{
    require_valid(spec);
    const int p = spec.p;
    switch (spec.tag) {
    case FamilyTag::B1:
        return polygon_with_pendants(3, {}, {spec.x, spec.x, p - 1 - 2 * spec.x}, p - 1);
    case FamilyTag::B2: {
        const int t = (p + 1) / 4;
        return polygon_with_pendants(4, {{0, 2}}, {t, t, t, t}, p - 1);
    }
    case FamilyTag::B3: {
        const int t = (p + 3) / 5;
        return polygon_with_pendants(5, {{0, 2}, {0, 3}}, {t, t, t, t, t}, p - 1);
    }
    case FamilyTag::C: return construct_c(spec);
    case FamilyTag::D: return construct_d(spec);
    case FamilyTag::EXC: return construct_exc();
    }
    throw std::invalid_argument("unknown family");
}

Scope sequence_scope(const DegreeSequence& s)
{
    const auto p = static_cast<long long>(s.p());
    if (p < 4 || s[0] != p - 1 || !s.even_sum())
        return Scope::Infeasible;
    for (int d : s.entries())
        if (d < 3 || d > p - 1)
            return Scope::Infeasible;
    const auto a = static_cast<long long>(s.a());
    if (a < 3 || 2 * a > p)
        return Scope::OutOfScopeA;
    if (p < 3 * a)
        return Scope::OutOfScopeP;
    return Scope::InScope;
}

FamilyMatch classify(const DegreeSequence& s)
{
    FamilyMatch m;
    m.scope = sequence_scope(s);
    if (m.scope == Scope::Infeasible)
        return m;
    for (const auto& spec : all_specs(static_cast<int>(s.p())))
        if (family_sequence(spec) == s)
            m.matches.push_back(spec);
    return m;
}

std::vector<std::pair<DegreeSequence, FamilySpec>> iterate_family_sequences(int p)
{
    std::vector<std::pair<DegreeSequence, FamilySpec>> out;
    std::set<DegreeSequence> seen;
    for (const auto& spec : all_specs(p)) {
        auto seq = family_sequence(spec);
        if (seen.insert(seq).second)
            out.emplace_back(std::move(seq), spec);
    }
    return out;
}

nlohmann::json family_spec_to_json(const FamilySpec& spec)
{
    nlohmann::json j{{"family", std::string(to_string(spec.tag))}, {"p", spec.p}, {"a", spec.a}};
    if (spec.tag == FamilyTag::B1 || spec.tag == FamilyTag::C)
        j["x"] = spec.x;
    if (spec.tag == FamilyTag::C) {
        j["y"] = family_y(spec);
        j["path_length"] = family_path_length(spec);
    }
    if (!spec_violation(spec))
        j["sequence"] = family_sequence(spec).entries();
    return j;
}

nlohmann::json family_match_to_json(const DegreeSequence& s, const FamilyMatch& m)
{
    nlohmann::json matches = nlohmann::json::array();
    for (const auto& spec : m.matches)
        matches.push_back(family_spec_to_json(spec));
    return {{"sequence", s.entries()},
            {"p", s.p()},
            {"a", s.a()},
            {"scope", std::string(to_string(m.scope))},
            {"matches", std::move(matches)},
            {"unigraphic", m.unigraphic()}};
}

}  // namespace unipoly
