#include "trapeze/complexity.hpp"

#include <algorithm>

#include "trapeze/suffix_automaton.hpp"

namespace trapeze {

namespace {

void require_non_empty(const Word& w, const char* op) {
    if (w.empty()) throw EmptyWordError(op);
}

std::map<std::size_t, std::vector<SpecialFactor>> right_specials(const Word& w, bool reversed) {
    SuffixAutomaton sam(w.view());
    std::map<std::size_t, std::vector<SpecialFactor>> out;
    const auto& st = sam.states();
    if (st[0].out_degree >= 2)
        out[0].push_back({Word{}, static_cast<std::size_t>(st[0].out_degree)});
    for (std::size_t v = 1; v < st.size(); ++v) {
        if (st[v].out_degree < 2) continue;
        const auto lo = static_cast<std::size_t>(st[st[v].link].len) + 1;
        const auto hi = static_cast<std::size_t>(st[v].len);
        const auto end = static_cast<std::size_t>(st[v].first_end) + 1;
        for (std::size_t len = lo; len <= hi; ++len) {
            Word f = w.substr(end - len, len);
            out[len].push_back({reversed ? reverse(f) : std::move(f),
                                static_cast<std::size_t>(st[v].out_degree)});
        }
    }
    for (auto& [len, fs] : out)
        std::sort(fs.begin(), fs.end(),
                  [](const SpecialFactor& a, const SpecialFactor& b) { return a.factor < b.factor; });
    return out;
}

} // namespace

ComplexityProfile complexity_profile(const Word& w) {
    require_non_empty(w, "complexity_profile");
    SuffixAutomaton sam(w.view());
    return {sam.factor_counts(), w.size()};
}

std::size_t right_valence(const Word& w, const Word& u) {
    SuffixAutomaton sam(w.view());
    const auto s = sam.find(u.view());
    if (s < 0) throw NotAFactorError("right_valence: '" + u.str() + "' is not a factor of '" + w.str() + "'");
    return static_cast<std::size_t>(sam.states()[static_cast<std::size_t>(s)].out_degree);
}

std::size_t left_valence(const Word& w, const Word& u) {
    try {
        return right_valence(reverse(w), reverse(u));
    } catch (const NotAFactorError&) {
        throw NotAFactorError("left_valence: '" + u.str() + "' is not a factor of '" + w.str() + "'");
    }
}

RightParameters right_parameters(const Word& w) {
    require_non_empty(w, "right_parameters");
    SuffixAutomaton sam(w.view());
    return {sam.longest_right_special() + 1, sam.shortest_unrepeated_suffix()};
}

Parameters parameters(const Word& w) {
    require_non_empty(w, "parameters");
    const auto right = right_parameters(w);
    const auto left = right_parameters(reverse(w));
    return {right.R, right.K, left.R, left.K};
}

SpecialFactorReport special_factor_report(const Word& w) {
    require_non_empty(w, "special_factor_report");
    SpecialFactorReport rep;
    const auto p = parameters(w);
    rep.R = p.R;
    rep.K = p.K;
    rep.L = p.L;
    rep.H = p.H;
    rep.right_special_by_length = right_specials(w, false);
    rep.left_special_by_length = right_specials(reverse(w), true);
    for (auto& [len, fs] : rep.left_special_by_length)
        std::sort(fs.begin(), fs.end(),
                  [](const SpecialFactor& a, const SpecialFactor& b) { return a.factor < b.factor; });

    std::set<Word> right;
    for (const auto& [len, fs] : rep.right_special_by_length)
        for (const auto& f : fs) right.insert(f.factor);
    for (const auto& [len, fs] : rep.left_special_by_length)
        for (const auto& f : fs)
            if (right.count(f.factor)) rep.bispecial.insert(f.factor);
    return rep;
}

std::size_t minimal_period(const Word& w) {
    require_non_empty(w, "minimal_period");
    // |w| minus the longest proper border (KMP failure function).
    const std::size_t n = w.size();
    std::vector<std::size_t> fail(n + 1, 0);
    for (std::size_t i = 1, k = 0; i < n; ++i) {
        while (k > 0 && w[i] != w[k]) k = fail[k];
        if (w[i] == w[k]) ++k;
        fail[i + 1] = k;
    }
    return n - fail[n];
}

} // namespace trapeze
