#include "exm/json_io.hpp"

#include <stdexcept>

namespace exm {

namespace {

[[noreturn]] void bad(const std::string& what) {
    throw std::invalid_argument("input error: " + what);
}

const json& need(const json& j, const char* key) {
    auto it = j.find(key);
    if (it == j.end()) bad(std::string("missing field '") + key + "'");
    return *it;
}

Rational rat(const json& j) {
    if (j.is_number_integer()) return Rational(j.get<long long>());
    if (!j.is_string()) bad("expected a rational string, got " + j.dump());
    return Rational::parse(j.get<std::string>());
}

std::string rat_str(const Rational& r) { return r.to_string(); }

}  // namespace

json parse_json_text(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) bad("malformed JSON: " + text.substr(0, 120));
    return j;
}

GroupSpec group_from_json(const json& j) {
    std::string type = need(j, "type").get<std::string>();
    if (type == "real_add") return GroupSpec::real_add();
    if (type == "pos_mul") return GroupSpec::pos_mul();
    if (type == "int_add") return GroupSpec::int_add();
    if (type == "finite") {
        auto table = need(j, "cayley").get<std::vector<std::vector<int>>>();
        return GroupSpec::finite(CayleyTable(std::move(table)));
    }
    bad("unknown group type '" + type + "'");
}

json group_to_json(const GroupSpec& G) {
    json j;
    j["type"] = group_type_name(G.type());
    if (G.type() == GroupType::finite) {
        j["cayley"] = G.table().table;
        j["identity"] = G.table().identity;
    }
    return j;
}

SetValue set_from_json(const json& j, const GroupSpec& G) {
    switch (G.type()) {
        case GroupType::finite: {
            int carrier = G.table().n;
            if (j.contains("carrier")) carrier = j["carrier"].get<int>();
            FiniteSet out = FiniteSet::empty(carrier);
            for (int e : need(j, "members").get<std::vector<int>>()) {
                if (e < 0 || e >= carrier) bad("finite set member out of carrier");
                out.mask |= 1u << e;
            }
            return out;
        }
        case GroupType::int_add: {
            bool cofinite = j.value("cofinite", false);
            auto elems = need(j, cofinite ? "excluded" : "elements").get<std::vector<std::int64_t>>();
            return cofinite ? IntSet::all_but(std::move(elems)) : IntSet::finite(std::move(elems));
        }
        default: {
            Kind kind = kind_from_name(need(j, "kind").get<std::string>());
            std::vector<IntervalSet::Interval> ivs;
            for (const auto& pair : need(j, "intervals")) {
                if (!pair.is_array() || pair.size() != 2) bad("interval must be a [lo, hi] pair");
                ivs.emplace_back(rat(pair[0]), rat(pair[1]));
            }
            return IntervalSet(kind, std::move(ivs));
        }
    }
    bad("unreachable carrier");
}

json set_to_json(const SetValue& s) {
    json j;
    if (const auto* is = std::get_if<IntervalSet>(&s)) {
        j["kind"] = kind_name(is->kind());
        j["intervals"] = json::array();
        for (const auto& [lo, hi] : is->intervals())
            j["intervals"].push_back({rat_str(lo), rat_str(hi)});
        return j;
    }
    if (const auto* fs = std::get_if<FiniteSet>(&s)) {
        j["carrier"] = fs->carrier_size;
        j["members"] = fs->elements();
        return j;
    }
    const auto& z = std::get<IntSet>(s);
    if (z.cofinite) {
        j["cofinite"] = true;
        j["excluded"] = z.elems;
    } else {
        j["elements"] = z.elems;
    }
    return j;
}

Element element_from_json(const json& j, const GroupSpec& G) {
    if (G.type() == GroupType::finite) {
        if (!j.is_number_integer()) bad("finite group element must be an index");
        return Element(j.get<int>());
    }
    return Element(rat(j));
}

json element_to_json(const Element& e) {
    if (std::holds_alternative<int>(e)) return std::get<int>(e);
    return std::get<Rational>(e).to_string();
}

MeasureSpec measure_from_json(const json& j, const GroupSpec& G) {
    std::string type = need(j, "type").get<std::string>();
    if (type == "lebesgue") return MeasureSpec::lebesgue(G, rat(need(j, "scale")));
    if (type == "counting") return MeasureSpec::counting(G);
    if (type == "dirac") return MeasureSpec::dirac(G, element_from_json(need(j, "at"), G));
    if (type == "haar") {
        PositiveCompact K0(G, set_from_json(need(j, "K0"), G));
        int n = need(j, "n").get<int>();
        HaarEvaluator ev{G, std::move(K0), n, EpsSchedule::dyadic(std::max(1, n))};
        return MeasureSpec::haar(std::move(ev));
    }
    bad("unknown measure type '" + type + "'");
}

json measure_to_json(const MeasureSpec& m) {
    json j;
    switch (m.type()) {
        case MeasureType::lebesgue_scaled:
            j["type"] = "lebesgue";
            j["scale"] = m.scale().to_string();
            break;
        case MeasureType::counting:
            j["type"] = "counting";
            break;
        case MeasureType::dirac:
            j["type"] = "dirac";
            j["at"] = element_to_json(m.atom());
            break;
        case MeasureType::haar_estimate:
            j["type"] = "haar";
            j["K0"] = set_to_json(m.haar_evaluator().K0.set);
            j["n"] = m.haar_evaluator().n_max;
            break;
    }
    return j;
}

RectUnion rect_union_from_json(const json& j) {
    std::vector<RectUnion::Slab> slabs;
    for (const auto& s : need(j, "slabs")) {
        const json& x = need(s, "x");
        if (!x.is_array() || x.size() != 2) bad("slab x must be a [lo, hi] pair");
        SetValue y = set_from_json(need(s, "y"), GroupSpec::real_add());
        slabs.push_back({rat(x[0]), rat(x[1]), std::get<IntervalSet>(y)});
    }
    return RectUnion::from_slabs(slabs);
}

json rect_union_to_json(const RectUnion& r) {
    json j;
    j["slabs"] = json::array();
    for (const auto& s : r.slabs()) {
        json js;
        js["x"] = {rat_str(s.x_lo), rat_str(s.x_hi)};
        js["y"] = set_to_json(SetValue(s.y));
        j["slabs"].push_back(std::move(js));
    }
    return j;
}

ProductSet product_set_from_json(const json& j, const GroupSpec& G) {
    switch (G.type()) {
        case GroupType::finite: {
            FinitePairSet out(G.table().n);
            for (const auto& p : need(j, "pairs")) {
                if (!p.is_array() || p.size() != 2) bad("pair must be [x, y]");
                int x = p[0].get<int>(), y = p[1].get<int>();
                if (x < 0 || x >= out.carrier_size || y < 0 || y >= out.carrier_size)
                    bad("pair out of carrier");
                out.insert(x, y);
            }
            return out;
        }
        case GroupType::int_add: {
            std::vector<std::pair<std::int64_t, IntSet>> slabs;
            for (const auto& s : need(j, "slabs")) {
                SetValue y = set_from_json(need(s, "y"), G);
                slabs.emplace_back(need(s, "x").get<std::int64_t>(), std::get<IntSet>(y));
            }
            return IntPairSlabs(std::move(slabs));
        }
        default:
            return rect_union_from_json(j);
    }
    bad("unreachable carrier");
}

json product_set_to_json(const ProductSet& p) {
    if (const auto* r = std::get_if<RectUnion>(&p)) return rect_union_to_json(*r);
    json j;
    if (const auto* f = std::get_if<FinitePairSet>(&p)) {
        j["carrier"] = f->carrier_size;
        j["pairs"] = json::array();
        for (int x = 0; x < f->carrier_size; ++x)
            for (int y = 0; y < f->carrier_size; ++y)
                if (f->contains(x, y)) j["pairs"].push_back({x, y});
        return j;
    }
    const auto& z = std::get<IntPairSlabs>(p);
    j["slabs"] = json::array();
    for (const auto& [x, y] : z.slabs) {
        json js;
        js["x"] = x;
        js["y"] = set_to_json(SetValue(y));
        j["slabs"].push_back(std::move(js));
    }
    return j;
}

SimpleFunc simple_func_from_json(const json& j, const GroupSpec& G) {
    std::vector<SimpleFunc::Piece> pieces;
    for (const auto& p : need(j, "pieces"))
        pieces.push_back({set_from_json(need(p, "set"), G), ExtNonneg::parse(need(p, "value").get<std::string>())});
    return SimpleFunc(std::move(pieces));
}

json simple_func_to_json(const SimpleFunc& f) {
    json j;
    j["pieces"] = json::array();
    for (const auto& p : f.pieces()) {
        json jp;
        jp["set"] = set_to_json(p.set);
        jp["value"] = p.value.to_string();
        j["pieces"].push_back(std::move(jp));
    }
    return j;
}

namespace {
VecQ vec_from_json(const json& j, std::size_t dim) {
    if (!j.is_array() || j.size() != dim) bad("vector value has the wrong dimension");
    std::vector<Rational> comps;
    for (const auto& c : j) comps.push_back(rat(c));
    return VecQ(std::move(comps));
}
}  // namespace

StepFuncVec step_func_from_json(const json& j, const GroupSpec& G) {
    std::size_t dim = need(j, "dim").get<std::size_t>();
    std::vector<StepFuncVec::Piece> pieces;
    for (const auto& p : need(j, "pieces"))
        pieces.push_back({set_from_json(need(p, "set"), G), vec_from_json(need(p, "value"), dim)});
    return StepFuncVec(dim, std::move(pieces));
}

json step_func_to_json(const StepFuncVec& f) {
    json j;
    j["dim"] = f.dim();
    j["pieces"] = json::array();
    for (const auto& p : f.pieces()) {
        json jp;
        jp["set"] = set_to_json(p.set);
        jp["value"] = json::array();
        for (const auto& c : p.value.comps) jp["value"].push_back(c.to_string());
        j["pieces"].push_back(std::move(jp));
    }
    return j;
}

SimpleFunc2D simple_func2d_from_json(const json& j, const GroupSpec& G) {
    std::vector<SimpleFunc2D::Piece> pieces;
    for (const auto& p : need(j, "pieces"))
        pieces.push_back({product_set_from_json(need(p, "region"), G),
                          ExtNonneg::parse(need(p, "value").get<std::string>())});
    return SimpleFunc2D(std::move(pieces));
}

StepFuncVec2D step_func2d_from_json(const json& j, const GroupSpec& G) {
    std::size_t dim = need(j, "dim").get<std::size_t>();
    std::vector<StepFuncVec2D::Piece> pieces;
    for (const auto& p : need(j, "pieces"))
        pieces.push_back({product_set_from_json(need(p, "region"), G),
                          vec_from_json(need(p, "value"), dim)});
    return StepFuncVec2D(dim, std::move(pieces));
}

}  // namespace exm
