#include "unipoly/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <numeric>
#include <set>
#include <thread>
#include <unordered_map>

#include "unipoly/canonical.hpp"
#include "unipoly/families.hpp"

namespace unipoly {

std::optional<std::vector<int>> rim_chord_degrees(const DegreeSequence& s)
{
    const int p = static_cast<int>(s.p());
    if (p < 4 || s[0] != p - 1)
        return std::nullopt;
    std::vector<int> c;
    long long total = 0;
    for (std::size_t i = 1; i < s.p(); ++i) {
        if (s[i] < 3 || s[i] > p - 1)
            return std::nullopt;
        c.push_back(s[i] - 3);
        total += s[i] - 3;
    }
    const int n = p - 1;
    if (total % 2 != 0 || total / 2 > n - 3)
        return std::nullopt;
    return c;
}

namespace {

void run_parallel(std::size_t count, std::size_t jobs, const std::function<void(std::size_t)>& work)
{
    jobs = std::max<std::size_t>(1, std::min(jobs, count));
    if (jobs == 1) {
        for (std::size_t i = 0; i < count; ++i)
            work(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < jobs; ++t)
        pool.emplace_back([&] {
            for (std::size_t i = next++; i < count; i = next++)
                work(i);
        });
    for (auto& th : pool)
        th.join();
}

struct SearchState {
    std::vector<int> deg;
    std::vector<int> cap;
    /// remaining[v] = how many unprocessed rim vertices must end with chord degree v.
    std::vector<int> remaining;
    std::vector<Chord> chords;
};

class ChordSearch {
public:
    using Visitor = std::function<bool(const std::vector<Chord>&)>;

    ChordSearch(int rim, const std::vector<int>& targets) : n_(rim)
    {
        max_value_ = targets.empty() ? 0 : *std::max_element(targets.begin(), targets.end());
        state_.deg.assign(static_cast<std::size_t>(n_), 0);
        state_.cap.assign(static_cast<std::size_t>(n_), n_ - 1);
        state_.cap[0] = n_ - 2;
        state_.remaining.assign(static_cast<std::size_t>(max_value_ + 1), 0);
        for (int t : targets)
            ++state_.remaining[static_cast<std::size_t>(t)];
    }

    /// States after position 0 is settled.
    std::vector<SearchState> frontier()
    {
        std::vector<SearchState> out;
        collect_ = &out;
        choose(0, 2);
        collect_ = nullptr;
        return out;
    }

    /// Runs the search below `start` (a frontier state), calling visit on
    /// every complete chord set; visit returns true to stop.
    void run(const SearchState& start, const Visitor& visit)
    {
        state_ = start;
        visit_ = &visit;
        stopped_ = false;
        vertex(1);
        visit_ = nullptr;
    }

    std::uint64_t nodes() const noexcept { return nodes_; }
    bool stopped() const noexcept { return stopped_; }

private:
    int max_remaining() const
    {
        for (int v = max_value_; v >= 0; --v)
            if (state_.remaining[static_cast<std::size_t>(v)] > 0)
                return v;
        return -1;
    }

    void vertex(int i)
    {
        if (stopped_)
            return;
        if (i == n_) {
            stopped_ = (*visit_)(state_.chords);
            return;
        }
        choose(i, i + 2);
    }

    void choose(int i, int j)
    {
        if (stopped_)
            return;
        ++nodes_;
        auto& deg = state_.deg;
        const int last = state_.cap[static_cast<std::size_t>(i)];
        if (j > last) {
            settle(i);
            return;
        }
        const int top = max_remaining();
        const auto ui = static_cast<std::size_t>(i), uj = static_cast<std::size_t>(j);
        if (deg[ui] < top && deg[uj] < top) {
            ++deg[ui];
            ++deg[uj];
            state_.chords.emplace_back(i, j);
            std::vector<int> saved(state_.cap.begin() + i + 1, state_.cap.begin() + j);
            for (int v = i + 1; v < j; ++v)
                state_.cap[static_cast<std::size_t>(v)] = std::min(state_.cap[static_cast<std::size_t>(v)], j);
            choose(i, j + 1);
            std::copy(saved.begin(), saved.end(), state_.cap.begin() + i + 1);
            state_.chords.pop_back();
            --deg[ui];
            --deg[uj];
        }
        choose(i, j + 1);
    }

    void settle(int i)
    {
        const int d = state_.deg[static_cast<std::size_t>(i)];
        // A rotation brings a vertex of maximum chord degree to position 0.
        if (i == 0 && d != max_value_)
            return;
        if (d > max_value_ || state_.remaining[static_cast<std::size_t>(d)] == 0)
            return;
        --state_.remaining[static_cast<std::size_t>(d)];
        if (feasible(i)) {
            if (collect_ && i == 0)
                collect_->push_back(state_);
            else
                vertex(i + 1);
        }
        ++state_.remaining[static_cast<std::size_t>(d)];
    }

    // Unsettled vertices can only gain chords, and each new chord adds two to
    // their total; so sorted current degrees must fit under the sorted
    // remaining values and the totals must differ by an even amount.
    bool feasible(int i) const
    {
        std::vector<int> cur;
        cur.reserve(static_cast<std::size_t>(n_ - i - 1));
        long long cur_sum = 0;
        for (int v = i + 1; v < n_; ++v) {
            cur.push_back(state_.deg[static_cast<std::size_t>(v)]);
            cur_sum += cur.back();
        }
        std::sort(cur.begin(), cur.end(), std::greater<>());
        std::size_t k = 0;
        long long rem_sum = 0;
        for (int v = max_value_; v >= 0; --v)
            for (int c = 0; c < state_.remaining[static_cast<std::size_t>(v)]; ++c, ++k) {
                if (cur[k] > v)
                    return false;
                rem_sum += v;
            }
        return (rem_sum - cur_sum) % 2 == 0;
    }

    int n_;
    int max_value_ = 0;
    SearchState state_;
    std::vector<SearchState>* collect_ = nullptr;
    const Visitor* visit_ = nullptr;
    bool stopped_ = false;
    std::uint64_t nodes_ = 0;
};

// Diagrams are visited in sorted order, so the first one seen per class is its least.
void add_classes(const std::vector<ChordDiagram>& sorted, const std::vector<CanonicalForm>& forms, RealizationReport& r)
{
    std::set<CanonicalForm> seen;
    for (std::size_t i = 0; i < sorted.size(); ++i)
        if (seen.insert(forms[i]).second)
            r.representatives.push_back(sorted[i]);
    std::sort(r.representatives.begin(), r.representatives.end());
    r.class_count = r.representatives.size();
}

}  // namespace

RealizationReport enumerate_realizations(const DegreeSequence& s, const EnumerateOptions& options)
{
    RealizationReport r;
    r.sequence = s;
    const auto targets = rim_chord_degrees(s);
    if (!targets)
        return r;
    const int n = static_cast<int>(s.p()) - 1;
    if (options.limit && *options.limit == 0) {
        r.truncated = true;
        return r;
    }

    ChordSearch root(n, *targets);
    const auto frontier = root.frontier();
    r.nodes_explored = root.nodes();

    if (options.limit) {
        std::set<ChordDiagram> seen;
        std::unordered_map<CanonicalForm, ChordDiagram> classes;
        ChordSearch search(n, *targets);
        ChordSearch::Visitor visit = [&](const std::vector<Chord>& chords) {
            auto cd = dihedral_canonical(ChordDiagram(n, chords));
            if (!seen.insert(cd).second)
                return false;
            auto form = canonical_form(to_polytope(cd));
            auto [it, fresh] = classes.emplace(std::move(form), cd);
            if (!fresh && cd < it->second)
                it->second = cd;
            return classes.size() >= *options.limit;
        };
        for (const auto& start : frontier) {
            search.run(start, visit);
            if (search.stopped()) {
                r.truncated = true;
                break;
            }
        }
        r.nodes_explored += search.nodes();
        for (auto& [form, cd] : classes)
            r.representatives.push_back(cd);
        std::sort(r.representatives.begin(), r.representatives.end());
        r.class_count = r.representatives.size();
        return r;
    }

    std::vector<std::set<ChordDiagram>> found(frontier.size());
    std::vector<std::uint64_t> nodes(frontier.size(), 0);
    run_parallel(frontier.size(), options.jobs, [&](std::size_t k) {
        ChordSearch search(n, *targets);
        search.run(frontier[k], [&](const std::vector<Chord>& chords) {
            found[k].insert(dihedral_canonical(ChordDiagram(n, chords)));
            return false;
        });
        nodes[k] = search.nodes();
    });
    r.nodes_explored += std::accumulate(nodes.begin(), nodes.end(), std::uint64_t{0});

    std::set<ChordDiagram> merged;
    for (auto& part : found)
        merged.merge(part);
    std::vector<ChordDiagram> sorted(merged.begin(), merged.end());
    std::vector<CanonicalForm> forms(sorted.size());
    run_parallel(sorted.size(), options.jobs, [&](std::size_t k) { forms[k] = canonical_form(to_polytope(sorted[k])); });
    add_classes(sorted, forms, r);
    return r;
}

bool is_unigraphic(const DegreeSequence& s)
{
    return enumerate_realizations(s, {.limit = 2}).class_count == 1;
}

std::vector<DegreeSequence> admissible_sequences(int p)
{
    std::vector<DegreeSequence> out;
    if (p < 5)
        return out;
    const int n = p - 1;
    std::vector<int> body;
    // body holds the rim entries above 3, non-increasing.
    std::function<void(int, int)> extend = [&](int slots, int max_value) {
        if (slots == 0) {
            std::vector<int> d{p - 1};
            d.insert(d.end(), body.begin(), body.end());
            d.resize(static_cast<std::size_t>(p), 3);
            DegreeSequence s(std::move(d));
            if (s.even_sum())
                out.push_back(std::move(s));
            return;
        }
        for (int v = max_value; v >= 4; --v) {
            body.push_back(v);
            extend(slots - 1, v);
            body.pop_back();
        }
    };
    for (int a = 3; 3 * a <= p; ++a)
        extend(n - a, p - 1);
    std::sort(out.begin(), out.end(), std::greater<>());
    return out;
}

VerificationReport verify_theorem(int p_min, int p_max, std::size_t jobs)
{
    VerificationReport report;
    report.p_min = p_min;
    report.p_max = p_max;
    std::vector<DegreeSequence> all;
    for (int p = p_min; p <= p_max; ++p) {
        auto part = admissible_sequences(p);
        all.insert(all.end(), part.begin(), part.end());
    }
    std::vector<char> oracle(all.size(), 0);
    run_parallel(all.size(), jobs, [&](std::size_t k) { oracle[k] = is_unigraphic(all[k]) ? 1 : 0; });

    for (std::size_t k = 0; k < all.size(); ++k) {
        const auto match = classify(all[k]);
        const bool predicted = match.unigraphic();
        const bool actual = oracle[k] != 0;
        ++report.examined;
        if (predicted != actual) {
            report.disagreements.push_back({all[k], predicted, actual});
            continue;
        }
        ++report.agreements;
        if (!actual)
            continue;
        report.unigraphic.push_back(all[k]);
        std::set<FamilyTag> tags;
        for (const auto& spec : match.matches)
            tags.insert(spec.tag);
        for (auto tag : tags)
            ++report.family_counts[std::string(to_string(tag))];
    }
    return report;
}

nlohmann::json realization_report_to_json(const RealizationReport& r)
{
    nlohmann::json reps = nlohmann::json::array();
    for (const auto& cd : r.representatives)
        reps.push_back(diagram_to_json(cd));
    return {{"sequence", r.sequence.entries()},
            {"class_count", r.class_count},
            {"representatives", std::move(reps)},
            {"truncated", r.truncated},
            {"nodes_explored", r.nodes_explored}};
}

nlohmann::json verification_report_to_json(const VerificationReport& r)
{
    nlohmann::json disagreements = nlohmann::json::array();
    for (const auto& d : r.disagreements)
        disagreements.push_back({{"sequence", d.sequence.entries()},
                                 {"classified_unigraphic", d.classified_unigraphic},
                                 {"oracle_unigraphic", d.oracle_unigraphic}});
    nlohmann::json unigraphic = nlohmann::json::array();
    for (const auto& s : r.unigraphic)
        unigraphic.push_back(s.entries());
    return {{"p_min", r.p_min},
            {"p_max", r.p_max},
            {"examined", r.examined},
            {"agreements", r.agreements},
            {"disagreements", std::move(disagreements)},
            {"family_counts", r.family_counts},
            {"unigraphic", std::move(unigraphic)}};
}

}  // namespace unipoly
