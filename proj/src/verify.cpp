#include "trapeze/verify.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <utility>

#include "trapeze/complexity.hpp"
#include "trapeze/palindromes.hpp"
#include "trapeze/rich_gt.hpp"
#include "trapeze/trapezoid.hpp"

namespace trapeze {

bool VerificationReport::all_passed() const {
    return std::all_of(results.begin(), results.end(), [](const auto& r) { return r.passed; });
}

std::size_t VerificationReport::failure_count() const {
    return static_cast<std::size_t>(
        std::count_if(results.begin(), results.end(), [](const auto& r) { return !r.passed; }));
}

const InvariantResult* VerificationReport::find(const std::string& id) const {
    for (const auto& r : results)
        if (r.id == id) return &r;
    return nullptr;
}

namespace {

// Everything the checks need about one word, computed on first use.
class Subject {
public:
    Subject(const Word& w, std::size_t enum_alphabet, const VerifyOptions& opts)
        : w_(w), k_(enum_alphabet), opts_(opts), a_(alphabet_size(w)) {}

    const Word& w() const { return w_; }
    std::size_t n() const { return w_.size(); }
    std::size_t a() const { return a_; }
    std::size_t enum_alphabet() const { return k_; }

    const std::vector<std::size_t>& c() {
        if (!profile_) profile_ = complexity_profile(w_);
        return profile_->values;
    }
    const Parameters& params() {
        if (!params_) params_ = parameters(w_);
        return *params_;
    }
    const std::optional<TrapezoidParams>& shape() {
        if (!shape_) shape_ = is_gt_by_definition(w_);
        return *shape_;
    }
    bool gt() { return shape().has_value(); }
    bool gt_by_heart() {
        return opts_.gt_by_heart_override ? opts_.gt_by_heart_override(w_) : is_gt_by_heart(w_);
    }
    const HeartDecomposition& hd() {
        if (!hd_) hd_ = heart_decompose(w_);
        return *hd_;
    }
    const Word& v() { return hd().heart; }
    const Parameters& heart_params() {
        if (!heart_params_) heart_params_ = parameters(v());
        return *heart_params_;
    }
    const SpecialFactorReport& specials() {
        if (!specials_) specials_ = special_factor_report(w_);
        return *specials_;
    }
    bool rk() { return n() + 2 == params().R + params().K + a_; }
    bool rich() {
        if (!rich_) rich_ = is_rich_by_count(w_);
        return *rich_;
    }
    bool heart_rich() {
        if (!heart_rich_) heart_rich_ = is_rich_by_count(v());
        return *heart_rich_;
    }
    const Word& rev() {
        if (!rev_) rev_ = reverse(w_);
        return *rev_;
    }
    const SeparationAnalysis& heart_sep() {
        if (!sep_) sep_ = separation_analysis(v());
        return *sep_;
    }
    const RichGtClassification& classification() {
        if (!cls_) cls_ = classify_rich_gt(w_);
        return *cls_;
    }

private:
    const Word& w_;
    std::size_t k_;
    const VerifyOptions& opts_;
    std::size_t a_;
    std::optional<ComplexityProfile> profile_;
    std::optional<Parameters> params_;
    std::optional<std::optional<TrapezoidParams>> shape_;
    std::optional<HeartDecomposition> hd_;
    std::optional<Parameters> heart_params_;
    std::optional<SpecialFactorReport> specials_;
    std::optional<bool> rich_, heart_rich_;
    std::optional<Word> rev_;
    std::optional<SeparationAnalysis> sep_;
    std::optional<RichGtClassification> cls_;
};

using Check = bool (*)(Subject&);

// ---- complexity ----------------------------------------------------------

bool profile_matches_factor_sets(Subject& s) {
    for (std::size_t len = 0; len <= s.n(); ++len) {
        const std::size_t brute = len == 0 ? 1 : factors_of_length(s.w(), len).size();
        if (s.c()[len] != brute) return false;
    }
    return true;
}

bool profile_endpoints(Subject& s) {
    return s.c()[0] == 1 && s.c()[1] == s.a() && s.c()[s.n()] == 1;
}

bool valence_identity(Subject& s) {
    for (std::size_t len = 0; len < s.n(); ++len) {
        std::size_t sum = 0;
        for (const auto& u : factors_of_length(s.w(), len)) sum += right_valence(s.w(), u);
        if (s.c()[len + 1] != sum) return false;
    }
    return true;
}

bool complexity_shape(Subject& s) {
    if (s.a() < 2) return true;
    const auto& c = s.c();
    const std::size_t R = s.params().R, K = s.params().K;
    const std::size_t m = std::min(R, K), M = std::max(R, K);
    for (std::size_t i = 0; i < m; ++i)
        if (c[i + 1] <= c[i]) return false;
    for (std::size_t i = m; i < M; ++i)
        if (c[i + 1] < c[i] || (R < K && c[i + 1] != c[i])) return false;
    for (std::size_t i = M; i < s.n(); ++i)
        if (c[i + 1] + 1 != c[i]) return false;
    return true;
}

bool rk_lh_inequality(Subject& s) {
    const auto& p = s.params();
    return s.n() + 2 >= p.R + p.K + s.a() && s.n() + 2 >= p.L + p.H + s.a();
}

bool max_rk_equals_max_lh(Subject& s) {
    const auto& p = s.params();
    return std::max(p.R, p.K) == std::max(p.L, p.H);
}

bool complexity_at_r_equals_at_l(Subject& s) {
    return s.c()[s.params().R] == s.c()[s.params().L];
}

bool reversal_duality(Subject& s) {
    const auto pr = parameters(s.rev());
    const auto& p = s.params();
    return pr.R == p.L && pr.K == p.H && pr.L == p.R && pr.H == p.K &&
           complexity_profile(s.rev()).values == s.c();
}

bool maximal_special_factor(Subject& s) {
    const auto& rep = s.specials();
    const auto& p = s.params();
    auto check = [&](const auto& by_length, bool right) {
        if (by_length.empty()) return true;
        const auto& longest = by_length.rbegin()->second;
        for (const auto& f : longest) {
            const bool at_end = right ? s.w().starts_with(f.factor) : s.w().ends_with(f.factor);
            const bool bispecial = rep.bispecial.count(f.factor) > 0;
            if (!at_end && !bispecial) return false;
            const bool forced = right ? p.R > p.H : p.L > p.K;
            if (forced && !bispecial) return false;
        }
        return true;
    };
    return check(rep.right_special_by_length, true) && check(rep.left_special_by_length, false);
}

bool unique_specials_of_valence_two(const std::map<std::size_t, std::vector<SpecialFactor>>& by_length,
                                    std::size_t bound) {
    for (std::size_t i = 0; i < bound; ++i) {
        auto it = by_length.find(i);
        if (it == by_length.end() || it->second.size() != 1) return false;
    }
    for (const auto& [len, fs] : by_length)
        for (const auto& f : fs)
            if (len > 0 && f.valence != 2) return false;
    return true;
}

bool right_special_structure(Subject& s) {
    if (s.a() < 2) return true;
    return s.rk() == unique_specials_of_valence_two(s.specials().right_special_by_length, s.params().R);
}

bool left_special_structure(Subject& s) {
    if (s.a() < 2) return true;
    const auto& p = s.params();
    const bool lh = s.n() + 2 == p.L + p.H + s.a();
    return lh == unique_specials_of_valence_two(s.specials().left_special_by_length, p.L);
}

bool minimal_period_bound(Subject& s) {
    const std::size_t pi = minimal_period(s.w());
    const std::size_t bound = s.params().R + s.a() - 1;
    if (pi < bound) return false;
    return pi != bound || s.rk();
}

// ---- trapezoid -----------------------------------------------------------

bool gt_equivalence(Subject& s) {
    const bool def = s.gt();
    return def == s.gt_by_heart() && def == is_gt_by_heart_lh(s.w());
}

bool rk_implies_gt(Subject& s) {
    return !s.rk() || s.gt();
}

bool rk_characterization(Subject& s) {
    if (s.a() < 2) return true;
    return s.rk() == rk_profile_check(s.w());
}

bool trapezoid_params(Subject& s) {
    const auto& t = s.shape();
    if (!t) return true;
    if (t->m > t->M) return false;
    if (s.a() == 1) return t->m == 1 && t->M == s.n();
    const std::size_t top = t->m + s.a() - 1;
    return t->plateau_height == top && s.c()[t->m] == top && s.c()[t->M] == top;
}

bool heart_decomposition(Subject& s) {
    const auto& hd = s.hd();
    if (hd.prefix + hd.heart + hd.suffix != s.w()) return false;
    const auto counts = letter_counts(s.w());
    auto once = [&](Symbol x) { return counts[x.id] == 1; };
    for (Symbol x : hd.prefix)
        if (!once(x)) return false;
    for (Symbol x : hd.suffix)
        if (!once(x)) return false;
    if (s.n() == s.a()) return hd.heart == s.w() && hd.prefix.empty() && hd.suffix.empty();
    // Maximality: the heart starts and ends with repeated letters.
    return !hd.heart.empty() && !once(hd.heart.front()) && !once(hd.heart.back());
}

bool heart_gt_lemma(Subject& s) {
    const auto hv = is_gt_by_definition(s.v());
    if (s.gt() != hv.has_value()) return false;
    return !hv || (hv->m == s.shape()->m && hv->M == s.shape()->M);
}

bool heart_rklh(Subject& s) {
    const auto& hp = s.heart_params();
    if (s.n() + 2 != hp.R + hp.K + s.a()) return true;
    return std::min(hp.R, hp.K) == std::min(hp.L, hp.H) && s.n() + 2 == hp.L + hp.H + s.a();
}

bool gt_reversal_closure(Subject& s) {
    return s.gt() == is_gt(s.rev());
}

bool gt_factor_closure(Subject& s) {
    return !s.gt() || gt_factor_closure_check(s.w());
}

bool triangle_criterion(Subject& s) {
    // R_v = K_v alone does not force a GT profile (aabba), so the
    // equivalence is read among GT-words.
    if (s.a() < 2 || !s.gt()) return true;
    return (s.shape()->m == s.shape()->M) == is_triangular(s.w());
}

// ---- palindromes ---------------------------------------------------------

bool palindrome_count_matches_factor_sets(Subject& s) {
    std::size_t brute = 1;  // ε
    for (const auto& f : all_factors(s.w()))
        if (is_palindrome(f)) ++brute;
    return brute == palindrome_count(s.w());
}

bool palindrome_bound(Subject& s) {
    return palindrome_count(s.w()) <= s.n() + 1;
}

bool richness_equivalence(Subject& s) {
    return s.rich() == is_rich_by_ups(s.w()) && s.rich() == is_rich_by_returns(s.w());
}

bool rich_ups_is_longest_palindromic_suffix(Subject& s) {
    if (!s.rich()) return true;
    const auto idx = palindrome_index(s.w());
    for (std::size_t i = 1; i <= s.n(); ++i) {
        const auto& e = idx.per_prefix_ups[i - 1];
        if (!e.unioccurrent) return false;
        if (e.longest_palindromic_suffix != longest_palindromic_suffix(s.w().prefix(i)).size()) return false;
    }
    return true;
}

bool rich_reversal_invariance(Subject& s) {
    return s.rich() == is_rich_by_count(s.rev());
}

bool rich_factor_closure(Subject& s) {
    // Maximal proper factors suffice: shorter factors are covered when the
    // enumeration reaches their own length.
    if (!s.rich() || s.n() < 2) return true;
    return is_rich_by_count(s.w().prefix(s.n() - 1)) && is_rich_by_count(s.w().suffix(s.n() - 1));
}

bool binary_gt_rich(Subject& s) {
    return s.a() > 2 || !s.gt() || s.rich();
}

bool binary_gt_unseparated(Subject& s) {
    return s.a() > 2 || !s.gt() || palindromic_ends_unseparated(s.w());
}

// ---- rich GT-words -------------------------------------------------------

bool rich_heart_lemma(Subject& s) {
    return !s.gt() || s.rich() == s.heart_rich();
}

bool classifier_soundness(Subject& s) {
    if (!s.gt()) return true;
    const auto& c = s.classification();
    return c.is_rich == s.rich() && c.is_rich == (c.condition != RichCondition::NonRich);
}

bool form_reinstantiation(Subject& s) {
    if (!s.gt()) return true;
    const auto& c = s.classification();
    return !c.matched_form || instantiate(*c.matched_form) == c.heart.heart;
}

bool separated(Subject& s) {
    return s.heart_sep().kind != SeparationKind::Unseparated;
}

bool gt_rich_lemma(Subject& s) {
    if (!s.gt() || !separated(s)) return true;
    const auto& sep = s.heart_sep();
    if (alphabet_relation(sep.p, sep.q) != AlphabetRelation::Incomparable) return true;
    const auto f = match_gt_rich_lemma_form(s.v());
    // Incomparable alphabets leave form (i) as the only option.
    return f.has_value() && s.rich();
}

bool sep_by_x_lemma(Subject& s) {
    if (!s.gt() || s.heart_sep().kind != SeparationKind::SeparatedByLetter) return true;
    const auto& sep = s.heart_sep();
    if (alphabet_relation(sep.p, sep.q) != AlphabetRelation::Nested) return true;
    const Symbol x = sep.separator[0];
    const bool inside = alphabet(sep.p).count(x) || alphabet(sep.q).count(x);
    return s.rich() == inside;
}

bool sep_by_u_lemma(Subject& s) {
    if (!s.gt() || s.heart_sep().kind != SeparationKind::SeparatedByWord) return true;
    const auto& sep = s.heart_sep();
    if (alphabet_relation(sep.p, sep.q) != AlphabetRelation::Nested) return true;
    auto pq = alphabet(sep.p);
    pq.merge(alphabet(sep.q));
    return !s.rich() && !is_subset(alphabet(sep.separator), pq);
}

bool rich_disjoint_lemma(Subject& s) {
    if (!s.gt() || !separated(s)) return true;
    const auto& sep = s.heart_sep();
    if (alphabet_relation(sep.p, sep.q) != AlphabetRelation::Disjoint) return true;
    const auto ap = alphabet(sep.p), aq = alphabet(sep.q);
    const Word& u = sep.separator;
    bool split = false;
    for (std::size_t i = 0; i <= u.size() && !split; ++i)
        for (std::size_t j = i; j <= u.size() && !split; ++j) {
            const auto z = alphabet(u.substr(i, j - i));
            split = is_subset(alphabet(u.prefix(i)), ap) && is_subset(alphabet(u.suffix(u.size() - j)), aq) &&
                    !intersects(z, ap) && !intersects(z, aq);
        }
    if (split != s.heart_rich()) return false;
    if (!split) return true;
    const auto f = match_rich_disjoint_form(s.v());
    return f && f->Z.size() == alphabet_size(f->Z) && f->instantiate() == s.v();
}

bool palindromic_heart_rich(Subject& s) {
    return !s.gt() || !is_palindrome(s.v()) || s.rich();
}

bool ternary_k1_rich(Subject& s) {
    return !s.gt() || s.a() != 3 || s.params().K != 1 || s.rich();
}

bool nonrich_types_nonrich(Subject& s) {
    const auto t = match_nonrich_types(s.w());
    return !t || (!s.rich() && t->instantiate() == s.w());
}

// ---- enumeration ---------------------------------------------------------

Word rename(const Word& w, std::size_t k) {
    std::vector<Symbol> out;
    out.reserve(w.size());
    for (Symbol x : w) out.emplace_back(static_cast<std::uint8_t>(k - 1 - x.id));
    return Word(std::move(out));
}

bool renaming_invariance(Subject& s) {
    const Word r = rename(s.w(), s.enum_alphabet());
    const auto shape = is_gt_by_definition(r);
    if (shape != s.shape() || parameters(r) != s.params() || complexity_profile(r).values != s.c() ||
        is_rich_by_count(r) != s.rich())
        return false;
    if (rename(heart(r), s.enum_alphabet()) != s.v()) return false;
    if (!shape) return true;
    const auto cr = classify_rich_gt(r);
    const auto& cw = s.classification();
    return cr.is_rich == cw.is_rich && cr.condition == cw.condition && cr.reason == cw.reason;
}

bool canonical_idempotence(Subject& s) {
    const Word c = canonical_form(s.w());
    return is_canonical(c) && canonical_form(c) == c && (!is_canonical(s.w()) || c == s.w());
}

struct Entry {
    const char* id;
    Check check;
};

const std::vector<Entry>& battery() {
    static const std::vector<Entry> entries = {
        {"complexity.profile_matches_factor_sets", profile_matches_factor_sets},
        {"complexity.profile_endpoints", profile_endpoints},
        {"complexity.valence_identity", valence_identity},
        {"complexity.shape", complexity_shape},
        {"complexity.rk_lh_inequality", rk_lh_inequality},
        {"complexity.max_rk_equals_max_lh", max_rk_equals_max_lh},
        {"complexity.c_at_r_equals_c_at_l", complexity_at_r_equals_at_l},
        {"complexity.reversal_duality", reversal_duality},
        {"complexity.maximal_special_factor", maximal_special_factor},
        {"complexity.right_special_structure", right_special_structure},
        {"complexity.left_special_structure", left_special_structure},
        {"complexity.minimal_period", minimal_period_bound},
        {"trapezoid.gt_equivalence", gt_equivalence},
        {"trapezoid.rk_implies_gt", rk_implies_gt},
        {"trapezoid.rk_characterization", rk_characterization},
        {"trapezoid.params", trapezoid_params},
        {"trapezoid.heart_decomposition", heart_decomposition},
        {"trapezoid.heart_gt_lemma", heart_gt_lemma},
        {"trapezoid.heart_rklh", heart_rklh},
        {"trapezoid.reversal_closure", gt_reversal_closure},
        {"trapezoid.factor_closure", gt_factor_closure},
        {"trapezoid.triangle_criterion", triangle_criterion},
        {"palindromes.count_matches_factor_sets", palindrome_count_matches_factor_sets},
        {"palindromes.bound", palindrome_bound},
        {"palindromes.richness_equivalence", richness_equivalence},
        {"palindromes.ups_is_longest_palindromic_suffix", rich_ups_is_longest_palindromic_suffix},
        {"palindromes.rich_reversal_invariance", rich_reversal_invariance},
        {"palindromes.rich_factor_closure", rich_factor_closure},
        {"palindromes.binary_gt_rich", binary_gt_rich},
        {"palindromes.binary_gt_unseparated", binary_gt_unseparated},
        {"rich_gt.rich_heart_lemma", rich_heart_lemma},
        {"rich_gt.classifier_soundness", classifier_soundness},
        {"rich_gt.form_reinstantiation", form_reinstantiation},
        {"rich_gt.gt_rich_lemma", gt_rich_lemma},
        {"rich_gt.sep_by_x_lemma", sep_by_x_lemma},
        {"rich_gt.sep_by_u_lemma", sep_by_u_lemma},
        {"rich_gt.rich_disjoint_lemma", rich_disjoint_lemma},
        {"rich_gt.palindromic_heart_rich", palindromic_heart_rich},
        {"rich_gt.ternary_k1_rich", ternary_k1_rich},
        {"rich_gt.nonrich_types_nonrich", nonrich_types_nonrich},
        {"enumerate.renaming_invariance", renaming_invariance},
        {"enumerate.canonical_idempotence", canonical_idempotence},
    };
    return entries;
}

struct Tally {
    std::size_t checked = 0;
    std::size_t failures = 0;
    std::optional<Word> first;
};

} // namespace

const std::vector<std::string>& invariant_ids() {
    static const std::vector<std::string> ids = [] {
        std::vector<std::string> out;
        for (const auto& e : battery()) out.emplace_back(e.id);
        return out;
    }();
    return ids;
}

VerificationReport verify_theorems(const EnumerationSpec& spec, const VerifyOptions& options) {
    validate(spec);
    std::vector<const Entry*> active;
    for (const auto& e : battery())
        if (options.only.empty() ||
            std::find(options.only.begin(), options.only.end(), e.id) != options.only.end())
            active.push_back(&e);

    const auto parts = partitions(spec);
    std::vector<std::vector<Tally>> partial(parts.size(), std::vector<Tally>(active.size()));
    parallel_for(parts.size(), options.jobs, [&](std::size_t i) {
        auto& tallies = partial[i];
        for_each_word(spec, parts[i].length, parts[i].prefix, [&](const Word& w) {
            Subject subject(w, spec.alphabet_size, options);
            for (std::size_t j = 0; j < active.size(); ++j) {
                Tally& t = tallies[j];
                ++t.checked;
                bool ok = false;
                try {
                    ok = active[j]->check(subject);
                } catch (const Error&) {
                    ok = false;
                }
                if (!ok && t.failures++ == 0) t.first = w;
            }
        });
    });

    // Partitions come in enumeration order (length, then prefix), so the
    // first failing partition holds the shortlex-least counterexample.
    VerificationReport report;
    report.spec = spec;
    for (std::size_t j = 0; j < active.size(); ++j) {
        InvariantResult r;
        r.id = active[j]->id;
        for (const auto& tallies : partial) {
            const Tally& t = tallies[j];
            r.words_checked += t.checked;
            r.failures += t.failures;
            if (t.first && !r.counterexample) r.counterexample = t.first;
        }
        r.passed = r.failures == 0;
        report.results.push_back(std::move(r));
    }
    return report;
}

} // namespace trapeze
