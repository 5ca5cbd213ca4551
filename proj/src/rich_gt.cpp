#include "trapeze/rich_gt.hpp"

#include <algorithm>

#include "trapeze/palindromes.hpp"

namespace trapeze {

namespace {

Word letter(Symbol s) { return Word{s}; }

Word alt(Symbol first, Symbol second, std::size_t reps) {
    // (first second)^reps first
    return power(Word{first, second}, reps) + letter(first);
}

struct Alternation {
    Symbol first, second;
    std::size_t reps;  // w = (first second)^reps first
};

std::optional<Alternation> parse_alternation(const Word& w) {
    if (w.size() < 3 || w.size() % 2 == 0 || w[0] == w[1]) return std::nullopt;
    for (std::size_t i = 0; i < w.size(); ++i)
        if (w[i] != w[i % 2]) return std::nullopt;
    return Alternation{w[0], w[1], w.size() / 2};
}

std::optional<Symbol> parse_power(const Word& w) {
    if (w.empty()) return std::nullopt;
    for (auto s : w)
        if (s != w[0]) return std::nullopt;
    return w[0];
}

bool distinct_letters(const Word& z) {
    return alphabet_size(z) == z.size();
}

bool avoids(const Word& z, std::initializer_list<std::optional<Symbol>> letters) {
    for (auto s : z)
        for (const auto& l : letters)
            if (l && *l == s) return false;
    return true;
}

template <class... S>
bool mutually_distinct(S... s) {
    std::set<Symbol> set{s...};
    return set.size() == sizeof...(S);
}

const char* roman(DisjointShape s) {
    switch (s) {
        case DisjointShape::I: return "i";
        case DisjointShape::II: return "ii";
        case DisjointShape::III: return "iii";
        case DisjointShape::IV: return "iv";
        case DisjointShape::V: return "v";
        case DisjointShape::VI: return "vi";
    }
    return "?";
}

// Tries the six direct shapes against v = p·u·q.
std::optional<DisjointForm> match_disjoint_direct(const Word& v, const Word& p, const Word& u,
                                                  const Word& q) {
    const auto pa = parse_alternation(p);
    const auto qa = parse_alternation(q);
    const auto pp = parse_power(p);
    const auto qp = parse_power(q);

    auto accept = [&](DisjointForm f) -> std::optional<DisjointForm> {
        if (!distinct_letters(f.Z) || !avoids(f.Z, {f.a, f.b, f.x, f.y})) return std::nullopt;
        if (f.instantiate() != v) return std::nullopt;
        return f;
    };

    // I, II, III: q = (yx)^n y and u ends with x.
    if (qa && !u.empty() && u.back() == qa->second) {
        const Symbol y = qa->first, x = qa->second;
        const std::size_t n = qa->reps;
        if (pa && u.size() >= 2 && u.front() == pa->second) {
            const Symbol b = pa->first, a = pa->second;
            if (mutually_distinct(a, b, x, y)) {
                auto f = accept({DisjointShape::II, false, a, x, b, y, pa->reps, n,
                                 u.substr(1, u.size() - 2)});
                if (f) return f;
            }
        }
        if (pa) {
            const Symbol a = pa->first, b = pa->second;
            if (mutually_distinct(a, b, x, y)) {
                auto f = accept({DisjointShape::I, false, a, x, b, y, pa->reps, n,
                                 u.prefix(u.size() - 1)});
                if (f) return f;
            }
        }
        if (pp && p.size() >= 2 && mutually_distinct(*pp, x, y)) {
            auto f = accept({DisjointShape::III, false, *pp, x, std::nullopt, y, p.size() - 1, n,
                             u.prefix(u.size() - 1)});
            if (f) return f;
        }
    }
    if (u.empty()) return std::nullopt;
    if (pa && qp && q.size() >= 2 && mutually_distinct(pa->first, pa->second, *qp)) {
        auto f = accept({DisjointShape::IV, false, pa->first, *qp, pa->second, std::nullopt,
                         pa->reps, q.size() - 1, u});
        if (f) return f;
    }
    if (pa && qa && mutually_distinct(pa->first, pa->second, qa->first, qa->second)) {
        auto f = accept({DisjointShape::V, false, pa->first, qa->first, pa->second, qa->second,
                         pa->reps, qa->reps, u});
        if (f) return f;
    }
    if (pp && qp && mutually_distinct(*pp, *qp)) {
        auto f = accept({DisjointShape::VI, false, *pp, *qp, std::nullopt, std::nullopt, p.size(),
                         q.size(), u});
        if (f) return f;
    }
    return std::nullopt;
}

} // namespace

// ---------------------------------------------------------------------------

SeparationAnalysis separation_analysis(const Word& v) {
    if (v.empty()) throw EmptyWordError("separation_analysis");
    SeparationAnalysis s;
    s.p = longest_palindromic_prefix(v);
    s.q = longest_palindromic_suffix(v);
    if (s.p.size() + s.q.size() >= v.size()) {
        s.kind = SeparationKind::Unseparated;
        return s;
    }
    s.separator = v.substr(s.p.size(), v.size() - s.p.size() - s.q.size());
    s.kind = s.separator.size() == 1 ? SeparationKind::SeparatedByLetter
                                     : SeparationKind::SeparatedByWord;
    return s;
}

AlphabetRelation alphabet_relation(const Word& p, const Word& q) {
    const auto a = alphabet(p), b = alphabet(q);
    if (!intersects(a, b)) return AlphabetRelation::Disjoint;
    if (is_subset(a, b) || is_subset(b, a)) return AlphabetRelation::Nested;
    return AlphabetRelation::Incomparable;
}

// ---------------------------------------------------------------------------

Word DisjointForm::instantiate() const {
    Word p, u, q;
    const Symbol bb = b.value_or(Symbol{});
    const Symbol yy = y.value_or(Symbol{});
    switch (shape) {
        case DisjointShape::I:
            p = alt(a, bb, m), u = Z + letter(x), q = alt(yy, x, n);
            break;
        case DisjointShape::II:
            p = alt(bb, a, m), u = letter(a) + Z + letter(x), q = alt(yy, x, n);
            break;
        case DisjointShape::III:
            p = power(a, m + 1), u = Z + letter(x), q = alt(yy, x, n);
            break;
        case DisjointShape::IV:
            p = alt(a, bb, m), u = Z, q = power(x, n + 1);
            break;
        case DisjointShape::V:
            p = alt(a, bb, m), u = Z, q = alt(x, yy, n);
            break;
        case DisjointShape::VI:
            p = power(a, m), u = Z, q = power(x, n);
            break;
    }
    Word v = p + u + q;
    return mirrored ? reverse(v) : v;
}

std::string DisjointForm::tag() const {
    return std::string("rich_disjoint_") + (mirrored ? "vii_" : "") + roman(shape);
}

Word SepByXForm::instantiate() const {
    const Word block = letter(b) + power(Word{x, a}, m) + letter(x);
    Word v = power(block, k) + letter(b) + power(Word{x, a}, n + 1);
    return mirrored ? reverse(v) : v;
}

Word GtRichLemmaForm::instantiate() const {
    return alt(a, x, n) + letter(x) + alt(b, x, m);
}

Word NonRichType::instantiate() const {
    if (type == 1) return letter(a) + Z1 + letter(a) + Z2 + letter(a);
    const Word ab{a, b.value_or(Symbol{})};
    if (type == 2) return power(ab, m + 1) + Z + power(ab, n - 1) + letter(a);
    return reverse(power(ab, m + 1) + reverse(Z) + power(ab, n - 1) + letter(a));
}

Word instantiate(const MatchedForm& f) {
    return std::visit([](const auto& g) { return g.instantiate(); }, f);
}

std::string form_tag(const MatchedForm& f) {
    return std::visit([](const auto& g) { return g.tag(); }, f);
}

// ---------------------------------------------------------------------------

std::optional<DisjointForm> match_rich_disjoint_form(const Word& v) {
    if (v.empty()) throw PreconditionError("match_rich_disjoint_form: empty word");
    const auto sep = separation_analysis(v);
    if (sep.kind == SeparationKind::Unseparated ||
        alphabet_relation(sep.p, sep.q) != AlphabetRelation::Disjoint)
        throw PreconditionError("match_rich_disjoint_form: '" + v.str() +
                                "' needs separated p, q with disjoint alphabets");

    if (auto f = match_disjoint_direct(v, sep.p, sep.separator, sep.q)) return f;
    // Reversal swaps the roles: p' = q, q' = p, u' = reverse(u).
    const Word rv = reverse(v);
    if (auto f = match_disjoint_direct(rv, sep.q, reverse(sep.separator), sep.p)) {
        f->mirrored = true;
        return f;
    }
    return std::nullopt;
}

namespace {

std::optional<SepByXForm> match_sep_by_x_direct(const Word& v, const Word& p, Symbol x,
                                                const Word& q) {
    const auto qa = parse_alternation(q);
    if (!qa || qa->second != x || p.size() < 4) return std::nullopt;
    const Symbol b = p[0], a = qa->first;
    if (!mutually_distinct(a, b, x)) return std::nullopt;
    // |p| = k(2m + 2) + 1; prefer the largest k.
    const std::size_t body = p.size() - 1;
    for (std::size_t k = body / 4; k >= 1; --k) {
        if (body % k != 0) continue;
        const std::size_t per = body / k;
        if (per < 4 || per % 2 != 0) continue;
        SepByXForm f{k, per / 2 - 1, qa->reps, a, b, x, false};
        if (f.instantiate() == v) return f;
    }
    return std::nullopt;
}

} // namespace

std::optional<SepByXForm> match_sep_by_x_form(const Word& v) {
    if (v.empty()) throw PreconditionError("match_sep_by_x_form: empty word");
    const auto sep = separation_analysis(v);
    if (sep.kind != SeparationKind::SeparatedByLetter ||
        alphabet_relation(sep.p, sep.q) != AlphabetRelation::Nested)
        throw PreconditionError("match_sep_by_x_form: '" + v.str() +
                                "' needs v = p·x·q with nested alphabets");
    const Symbol x = sep.separator[0];
    const auto ap = alphabet(sep.p), aq = alphabet(sep.q);
    if (!ap.count(x) && !aq.count(x)) return std::nullopt;

    if (auto f = match_sep_by_x_direct(v, sep.p, x, sep.q)) return f;
    if (auto f = match_sep_by_x_direct(reverse(v), sep.q, x, sep.p)) {
        f->mirrored = true;
        return f;
    }
    return std::nullopt;
}

std::optional<GtRichLemmaForm> match_gt_rich_lemma_form(const Word& v) {
    if (v.empty()) throw PreconditionError("match_gt_rich_lemma_form: empty word");
    const auto sep = separation_analysis(v);
    if (sep.kind == SeparationKind::Unseparated ||
        alphabet_relation(sep.p, sep.q) != AlphabetRelation::Incomparable)
        throw PreconditionError("match_gt_rich_lemma_form: '" + v.str() +
                                "' needs separated p, q with overlapping, incomparable alphabets");
    const auto pa = parse_alternation(sep.p);
    const auto qa = parse_alternation(sep.q);
    if (!pa || !qa || sep.separator.size() != 1) return std::nullopt;
    const Symbol x = sep.separator[0];
    if (pa->second != x || qa->second != x || !mutually_distinct(pa->first, qa->first, x))
        return std::nullopt;
    GtRichLemmaForm f{pa->reps, qa->reps, pa->first, qa->first, x};
    if (f.instantiate() != v) return std::nullopt;
    return f;
}

namespace {

std::optional<NonRichType> match_type1(const Word& v) {
    if (v.size() < 7 || v.front() != v.back()) return std::nullopt;
    const Symbol a = v[0];
    std::vector<std::size_t> at;
    for (std::size_t i = 0; i < v.size(); ++i)
        if (v[i] == a) at.push_back(i);
    if (at.size() != 3) return std::nullopt;
    NonRichType t;
    t.type = 1;
    t.a = a;
    t.Z1 = v.substr(1, at[1] - 1);
    t.Z2 = v.substr(at[1] + 1, v.size() - at[1] - 2);
    if (t.Z1.size() < 2 || t.Z2.size() < 2 || !distinct_letters(t.Z1) || !distinct_letters(t.Z2) ||
        intersects(alphabet(t.Z1), alphabet(t.Z2)))
        return std::nullopt;
    return t;
}

std::optional<NonRichType> match_type2(const Word& v) {
    if (v.size() < 6) return std::nullopt;
    const Symbol a = v[0], b = v[1];
    if (a == b) return std::nullopt;
    std::size_t pairs = 0;
    while (2 * pairs + 1 < v.size() && v[2 * pairs] == a && v[2 * pairs + 1] == b) ++pairs;
    if (pairs < 2) return std::nullopt;
    std::size_t z_end = 2 * pairs;
    while (z_end < v.size() && v[z_end] != a && v[z_end] != b) ++z_end;
    const Word Z = v.substr(2 * pairs, z_end - 2 * pairs);
    if (Z.empty() || !distinct_letters(Z)) return std::nullopt;
    const Word rest = v.substr(z_end, v.size() - z_end);
    if (rest.size() % 2 == 0) return std::nullopt;
    NonRichType t;
    t.type = 2;
    t.a = a;
    t.b = b;
    t.Z = Z;
    t.m = pairs - 1;
    t.n = rest.size() / 2 + 1;
    if (t.instantiate() != v) return std::nullopt;
    return t;
}

} // namespace

std::optional<NonRichType> match_nonrich_types(const Word& v) {
    if (auto t = match_type1(v)) return t;
    if (auto t = match_type2(v)) return t;
    if (auto t = match_type2(reverse(v))) {
        t->type = 3;
        t->Z = reverse(t->Z);
        return t;
    }
    return std::nullopt;
}

Word apply_phi_x(const Word& w, Symbol x) {
    std::vector<Symbol> out;
    out.reserve(2 * w.size());
    for (auto s : w) {
        out.push_back(s);
        if (s != x) out.push_back(x);
    }
    return Word(std::move(out));
}

// ---------------------------------------------------------------------------

RichGtClassification classify_rich_gt(const Word& w) {
    if (w.empty()) throw EmptyWordError("classify_rich_gt");
    if (!is_gt(w)) throw NotGtError("classify_rich_gt: '" + w.str() + "' is not a GT-word");

    RichGtClassification c;
    c.word = w;
    c.heart = heart_decompose(w);
    const Word& v = c.heart.heart;
    c.separation = separation_analysis(v);
    const auto& sep = c.separation;

    auto rich = [&](RichCondition cond) {
        c.is_rich = true;
        c.condition = cond;
    };
    auto non_rich = [&](NonRichReason why) {
        c.is_rich = false;
        c.condition = RichCondition::NonRich;
        c.reason = why;
        if (auto t = match_nonrich_types(v)) c.matched_form = *t;
    };

    if (sep.kind == SeparationKind::Unseparated) {
        rich(RichCondition::Unseparated);
        return c;
    }

    const Word& u = sep.separator;
    const auto ap = alphabet(sep.p), aq = alphabet(sep.q);
    switch (alphabet_relation(sep.p, sep.q)) {
        case AlphabetRelation::Incomparable:
            if (auto f = match_gt_rich_lemma_form(v)) {
                rich(RichCondition::LetterSeparated);
                c.matched_form = *f;
                return c;
            }
            [[fallthrough]];
        case AlphabetRelation::Nested:
            if (u.size() >= 2) {
                non_rich(NonRichReason::SeparatedByLongWord);
            } else if (!ap.count(u[0]) && !aq.count(u[0])) {
                non_rich(NonRichReason::LetterOutsideAlphabets);
            } else {
                rich(RichCondition::LetterSeparated);
                if (alphabet_relation(sep.p, sep.q) == AlphabetRelation::Nested)
                    if (auto f = match_sep_by_x_form(v)) c.matched_form = *f;
            }
            return c;
        case AlphabetRelation::Disjoint: {
            // u1 takes every leading letter of p, u2 every trailing letter of
            // q; what remains must avoid both alphabets.
            std::size_t i = 0, j = u.size();
            while (i < j && ap.count(u[i])) ++i;
            while (j > i && aq.count(u[j - 1])) --j;
            const Word z = u.substr(i, j - i);
            if (!intersects(alphabet(z), ap) && !intersects(alphabet(z), aq)) {
                rich(RichCondition::DisjointAlphabets);
                c.split = DisjointSplit{u.prefix(i), z, u.substr(j, u.size() - j)};
                if (auto f = match_rich_disjoint_form(v)) c.matched_form = *f;
            } else {
                non_rich(NonRichReason::NoDisjointSplit);
            }
            return c;
        }
    }
    return c;
}

std::string to_string(RichCondition c) {
    switch (c) {
        case RichCondition::Unseparated: return "unseparated";
        case RichCondition::LetterSeparated: return "letter_separated";
        case RichCondition::DisjointAlphabets: return "disjoint_alphabets";
        case RichCondition::NonRich: return "non_rich";
    }
    return "?";
}

std::string to_string(NonRichReason r) {
    switch (r) {
        case NonRichReason::None: return "none";
        case NonRichReason::LetterOutsideAlphabets: return "letter_outside_alphabets";
        case NonRichReason::SeparatedByLongWord: return "separated_by_long_word";
        case NonRichReason::NoDisjointSplit: return "no_disjoint_split";
    }
    return "?";
}

std::string to_string(SeparationKind k) {
    switch (k) {
        case SeparationKind::Unseparated: return "unseparated";
        case SeparationKind::SeparatedByLetter: return "separated_by_letter";
        case SeparationKind::SeparatedByWord: return "separated_by_word";
    }
    return "?";
}

} // namespace trapeze
