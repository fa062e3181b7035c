#include "cobordism/io.hpp"

#include <sstream>
#include <stdexcept>

namespace cobordism::io {

namespace {

[[noreturn]] void fail(const std::string& msg) { throw std::invalid_argument("schema: " + msg); }

const json& field(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) fail(std::string("missing \"") + key + "\"");
    return j.at(key);
}

int int_field(const json& j, const char* key) {
    const json& v = field(j, key);
    if (!v.is_number_integer()) fail(std::string("\"") + key + "\" must be an integer");
    return v.get<int>();
}

LinearForm form_from_json(const json& j) {
    if (!j.is_array()) fail("a line must be an array of integers");
    LinearForm f;
    for (const auto& x : j) {
        if (!x.is_number_integer()) fail("a line must be an array of integers");
        f.push_back(x.get<long>());
    }
    return f;
}

std::vector<LinearForm> forms_from_json(const json& j) {
    if (!j.is_array()) fail("lines must be an array");
    std::vector<LinearForm> out;
    for (const auto& x : j) out.push_back(form_from_json(x));
    return out;
}

}  // namespace

json to_json(const RingElement& r) {
    json terms = json::array();
    for (const auto& [m, c] : r.terms()) {
        terms.push_back({{"b", m.b.parts()}, {"t", m.t}, {"eps", m.eps}, {"coeff", c.to_string()}});
    }
    return {{"domain", r.domain().name()}, {"terms", terms}};
}

RingElement ring_from_json(const json& j) {
    const Domain d = Domain::parse(field(j, "domain").get<std::string>());
    RingElement r(d);
    for (const auto& t : field(j, "terms")) {
        Monomial m;
        m.b = Partition(field(t, "b").get<std::vector<int>>());
        m.t = t.value("t", 0);
        m.eps = t.value("eps", 0);
        r.add_term(m, base::parse(d.base, field(t, "coeff").get<std::string>()));
    }
    return r;
}

json to_json(const TruncatedSeries& s) {
    json terms = json::array();
    for (const auto& [e, c] : s.terms()) terms.push_back({{"exp", e}, {"coeff", to_json(c)}});
    return {{"domain", s.domain().name()}, {"vars", s.vars()}, {"order", s.order()}, {"terms", terms}};
}

TruncatedSeries series_from_json(const json& j) {
    TruncatedSeries s(Domain::parse(field(j, "domain").get<std::string>()),
                      field(j, "vars").get<std::vector<std::string>>(), int_field(j, "order"));
    for (const auto& t : field(j, "terms")) s.add_term(field(t, "exp").get<std::vector<int>>(), ring_from_json(field(t, "coeff")));
    return s;
}

json to_json(const VarietySpec& s) {
    switch (s.kind) {
        case VarietySpec::Kind::MultiProj: return {{"type", "multiproj"}, {"dims", s.dims}};
        case VarietySpec::Kind::ProjBundle: {
            json j{{"type", "projbundle"}, {"base", to_json(*s.base)}, {"lines", s.lines}};
            if (s.minus_trivial != 0) j["minus_trivial"] = s.minus_trivial;
            return j;
        }
        case VarietySpec::Kind::Product: {
            json f = json::array();
            for (const auto& p : s.parts) f.push_back(to_json(p));
            return {{"type", "product"}, {"factors", f}};
        }
        case VarietySpec::Kind::Disjoint: {
            json f = json::array();
            for (const auto& p : s.parts) f.push_back(to_json(p));
            return {{"type", "disjoint"}, {"components", f}};
        }
    }
    fail("unknown variety kind");
}

VarietySpec spec_from_json(const json& j) {
    const std::string type = field(j, "type").get<std::string>();
    if (type == "point") return VarietySpec::point();
    if (type == "multiproj") {
        const json& d = field(j, "dims");
        if (!d.is_array()) fail("\"dims\" must be an array");
        return VarietySpec::multiproj(d.get<std::vector<int>>());
    }
    if (type == "projbundle") {
        return VarietySpec::projbundle(spec_from_json(field(j, "base")), forms_from_json(field(j, "lines")),
                                       j.value("minus_trivial", 0));
    }
    if (type == "product" || type == "disjoint") {
        const json& parts = field(j, type == "product" ? "factors" : "components");
        if (!parts.is_array()) fail("parts must be an array");
        std::vector<VarietySpec> v;
        for (const auto& p : parts) v.push_back(spec_from_json(p));
        return type == "product" ? VarietySpec::product(std::move(v)) : VarietySpec::disjoint(std::move(v));
    }
    fail("unknown variety type \"" + type + "\"");
}

json to_json(const MuTwoActionModel& a) {
    json comps = json::array();
    for (const auto& c : a.components) {
        json cj{{"spec", to_json(c.spec)},
                {"codim", c.codim},
                {"normal_lines", c.normal.plus_lines},
                {"normal_trivial_rank", c.normal.plus_trivial}};
        if (c.normal.minus_trivial != 0) cj["normal_minus_trivial"] = c.normal.minus_trivial;
        comps.push_back(cj);
    }
    return {{"name", a.name}, {"ambient", to_json(a.ambient)}, {"components", comps}};
}

MuTwoActionModel builtin_action(const std::string& name, const json& params) {
    if (name == "linear_pn") return linear_pn(int_field(params, "n"), int_field(params, "a"));
    if (name == "factorwise_p1n") return factorwise_p1n(int_field(params, "n"));
    if (name == "swap_square") {
        if (params.contains("spec")) return swap_square(spec_from_json(params.at("spec")));
        return swap_square(VarietySpec::projective_space(int_field(params, "n")));
    }
    fail("unknown builtin \"" + name + "\"");
}

MuTwoActionModel action_from_json(const json& j) {
    if (j.is_object() && j.contains("builtin")) return builtin_action(j.at("builtin").get<std::string>(), j);
    MuTwoActionModel a;
    a.name = j.value("name", std::string("custom"));
    a.ambient = spec_from_json(field(j, "ambient"));
    const json& comps = field(j, "components");
    if (!comps.is_array()) fail("\"components\" must be an array");
    for (const auto& c : comps) {
        FixedComponent fc = make_component(spec_from_json(field(c, "spec")), int_field(c, "codim"),
                                           forms_from_json(c.value("normal_lines", json::array())),
                                           c.value("normal_trivial_rank", 0));
        fc.normal.minus_trivial = c.value("normal_minus_trivial", 0);
        a.components.push_back(std::move(fc));
    }
    a.validate();
    return a;
}

Status status_from_name(const std::string& s) {
    if (s == "pass") return Status::Pass;
    if (s == "fail") return Status::Fail;
    if (s == "hypothesis-not-met") return Status::HypothesisNotMet;
    fail("unknown status \"" + s + "\"");
}

json to_json(const CheckRecord& r) {
    json j{{"id", r.id},
           {"reference", r.reference},
           {"relation", r.relation},
           {"status", status_name(r.status)},
           {"lhs", to_json(r.lhs)},
           {"rhs", to_json(r.rhs)}};
    if (!r.note.empty()) j["note"] = r.note;
    return j;
}

CheckRecord record_from_json(const json& j) {
    CheckRecord r;
    r.id = field(j, "id").get<std::string>();
    r.reference = field(j, "reference").get<std::string>();
    r.relation = field(j, "relation").get<std::string>();
    r.status = status_from_name(field(j, "status").get<std::string>());
    r.lhs = ring_from_json(field(j, "lhs"));
    r.rhs = ring_from_json(field(j, "rhs"));
    r.note = j.value("note", std::string());
    return r;
}

json to_json(const Report& r) {
    json recs = json::array();
    for (const auto& rec : r.records) recs.push_back(to_json(rec));
    return {{"command", r.command}, {"ok", r.ok()}, {"records", recs}};
}

Report report_from_json(const json& j) {
    Report r;
    r.command = field(j, "command").get<std::string>();
    for (const auto& rec : field(j, "records")) r.records.push_back(record_from_json(rec));
    return r;
}

std::string render(const Report& r) {
    std::ostringstream out;
    out << r.command << "\n";
    std::size_t pass = 0;
    std::size_t failed = 0;
    std::size_t skipped = 0;
    for (const auto& rec : r.records) {
        out << "  [" << status_name(rec.status) << "] " << rec.id << "  (" << rec.reference << ")\n";
        if (rec.status != Status::HypothesisNotMet) {
            out << "      " << rec.relation << ": " << rec.lhs.to_string() << "  vs  " << rec.rhs.to_string() << "\n";
        }
        if (!rec.note.empty()) out << "      " << rec.note << "\n";
        switch (rec.status) {
            case Status::Pass: ++pass; break;
            case Status::Fail: ++failed; break;
            case Status::HypothesisNotMet: ++skipped; break;
        }
    }
    out << pass << " passed, " << failed << " failed, " << skipped << " hypothesis not met\n";
    return out.str();
}

}  // namespace cobordism::io
