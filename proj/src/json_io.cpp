#include "trapeze/json_io.hpp"

#include "trapeze/palindromes.hpp"

namespace trapeze {

using nlohmann::json;

namespace {

std::string letter(Symbol s) { return std::string(1, symbol_char(s)); }

json optional_letter(const std::optional<Symbol>& s) {
    return s ? json(letter(*s)) : json(nullptr);
}

const char* shape_name(DisjointShape s) {
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

struct ParamsVisitor {
    json operator()(const DisjointForm& f) const {
        return {{"shape", shape_name(f.shape)}, {"mirrored", f.mirrored}, {"a", letter(f.a)},
                {"b", optional_letter(f.b)},    {"x", letter(f.x)},       {"y", optional_letter(f.y)},
                {"m", f.m},                     {"n", f.n},               {"Z", f.Z.str()}};
    }
    json operator()(const SepByXForm& f) const {
        return {{"k", f.k}, {"m", f.m}, {"n", f.n}, {"a", letter(f.a)},
                {"b", letter(f.b)}, {"x", letter(f.x)}, {"mirrored", f.mirrored}};
    }
    json operator()(const GtRichLemmaForm& f) const {
        return {{"n", f.n}, {"m", f.m}, {"a", letter(f.a)}, {"b", letter(f.b)}, {"x", letter(f.x)}};
    }
    json operator()(const NonRichType& t) const {
        if (t.type == 1) return {{"type", 1}, {"a", letter(t.a)}, {"Z1", t.Z1.str()}, {"Z2", t.Z2.str()}};
        return {{"type", t.type}, {"a", letter(t.a)}, {"b", optional_letter(t.b)},
                {"Z", t.Z.str()}, {"m", t.m},         {"n", t.n}};
    }
};

} // namespace

json form_params_json(const MatchedForm& f) {
    return std::visit(ParamsVisitor{}, f);
}

json to_json(const RichGtClassification& c) {
    json j;
    j["word"] = c.word.str();
    j["heart"] = c.heart.heart.str();
    j["p"] = c.separation.p.str();
    j["q"] = c.separation.q.str();
    j["u"] = c.separation.separator.str();
    j["kind"] = to_string(c.separation.kind);
    j["is_rich"] = c.is_rich;
    j["condition"] = to_string(c.condition);
    j["reason"] = to_string(c.reason);
    if (c.split)
        j["split"] = {{"u1", c.split->u1.str()}, {"Z", c.split->Z.str()}, {"u2", c.split->u2.str()}};
    else
        j["split"] = nullptr;
    if (c.matched_form) {
        j["form"] = form_tag(*c.matched_form);
        j["params"] = form_params_json(*c.matched_form);
    } else {
        j["form"] = nullptr;
        j["params"] = nullptr;
    }
    return j;
}

AnalysisRecord analyze(const Word& w) {
    if (w.empty()) throw EmptyWordError("analyze");
    AnalysisRecord r;
    r.word = w;
    r.alphabet_size = alphabet_size(w);
    r.profile = complexity_profile(w).values;
    r.params = parameters(w);
    r.minimal_period = minimal_period(w);
    r.heart = heart_decompose(w);
    r.gt = is_gt_by_definition(w);
    if (r.alphabet_size >= 2) r.triangular = is_triangular(w);
    r.rk_condition = satisfies_rk_condition(w);
    r.rich = is_rich(w);
    if (r.gt) r.classification = classify_rich_gt(w);
    return r;
}

json to_json(const AnalysisRecord& r) {
    json j;
    j["word"] = r.word.str();
    j["alphabet_size"] = r.alphabet_size;
    j["profile"] = r.profile;
    j["R"] = r.params.R;
    j["K"] = r.params.K;
    j["L"] = r.params.L;
    j["H"] = r.params.H;
    j["minimal_period"] = r.minimal_period;
    j["heart"] = {{"r", r.heart.prefix.str()}, {"v", r.heart.heart.str()}, {"s", r.heart.suffix.str()}};
    j["gt"] = r.gt.has_value();
    if (r.gt)
        j["trapezoid"] = {{"m", r.gt->m}, {"M", r.gt->M}, {"plateau", r.gt->plateau_height}};
    else
        j["trapezoid"] = nullptr;
    j["triangular"] = r.triangular ? json(*r.triangular) : json(nullptr);
    j["rk_condition"] = r.rk_condition;
    j["rich"] = r.rich;
    j["classification"] = r.classification ? to_json(*r.classification) : json(nullptr);
    return j;
}

json to_json(const VerificationReport& r) {
    json out = json::array();
    for (const auto& res : r.results) {
        json e = {{"invariant_id", res.id}, {"status", res.passed ? "pass" : "fail"}};
        if (res.counterexample) e["counterexample"] = res.counterexample->str();
        out.push_back(std::move(e));
    }
    return out;
}

std::string dump(const json& j) {
    return j.dump();
}

} // namespace trapeze
