#include "exm/measure.hpp"

#include <algorithm>
#include <stdexcept>

namespace exm {

MeasureSpec MeasureSpec::lebesgue(GroupSpec G, Rational scale) {
    if (!G.is_continuous())
        throw std::domain_error("lebesgue measure: requires a continuous carrier");
    if (scale.sign() < 0) throw std::domain_error("lebesgue measure: negative scale");
    MeasureSpec m;
    m.type_ = MeasureType::lebesgue_scaled;
    m.group_ = std::move(G);
    m.scale_ = std::move(scale);
    m.sigma_finite_ = true;
    return m;
}

MeasureSpec MeasureSpec::counting(GroupSpec G) {
    MeasureSpec m;
    m.type_ = MeasureType::counting;
    m.sigma_finite_ = G.is_discrete();  // counting on a continuum is not sigma-finite
    m.group_ = std::move(G);
    return m;
}

MeasureSpec MeasureSpec::dirac(GroupSpec G, Element at) {
    G.validate_element(at);
    MeasureSpec m;
    m.type_ = MeasureType::dirac;
    m.group_ = std::move(G);
    m.atom_ = std::move(at);
    m.sigma_finite_ = true;
    return m;
}

MeasureSpec MeasureSpec::haar(HaarEvaluator evaluator) {
    MeasureSpec m;
    m.type_ = MeasureType::haar_estimate;
    m.group_ = evaluator.group;
    m.haar_ = std::make_shared<HaarEvaluator>(std::move(evaluator));
    m.sigma_finite_ = true;
    return m;
}

const HaarEvaluator& MeasureSpec::haar_evaluator() const {
    if (!haar_) throw std::domain_error("MeasureSpec: not a Haar estimate");
    return *haar_;
}

bool MeasureSpec::invariant_exact_family() const {
    if (type_ == MeasureType::lebesgue_scaled) return group_.type() == GroupType::real_add;
    if (type_ == MeasureType::counting) return group_.is_discrete();
    return false;
}

std::string MeasureSpec::to_string() const {
    switch (type_) {
        case MeasureType::lebesgue_scaled: return "lebesgue(" + scale_.to_string() + ")";
        case MeasureType::counting: return "counting";
        case MeasureType::dirac: return "dirac(" + element_to_string(atom_) + ")";
        case MeasureType::haar_estimate: return "haar_estimate(n=" + std::to_string(haar_->n_max) + ")";
    }
    throw std::logic_error("unreachable measure type");
}

ExtNonneg measure_eval(const MeasureSpec& mu, const SetValue& A) {
    mu.group().validate_set(A);
    switch (mu.type()) {
        case MeasureType::lebesgue_scaled:
            return ExtNonneg::finite(mu.scale()) * iset_length(std::get<IntervalSet>(A));
        case MeasureType::counting: {
            if (const auto* f = std::get_if<FiniteSet>(&A))
                return ExtNonneg::finite(Rational(f->size()));
            if (const auto* z = std::get_if<IntSet>(&A)) {
                if (z->cofinite) return ExtNonneg::infinity();
                return ExtNonneg::finite(Rational(static_cast<long long>(z->size())));
            }
            const auto& is = std::get<IntervalSet>(A);
            long long points = 0;
            for (const auto& [lo, hi] : is.intervals()) {
                if (lo < hi) return ExtNonneg::infinity();
                ++points;
            }
            return ExtNonneg::finite(Rational(points));
        }
        case MeasureType::dirac:
            return ExtNonneg::finite(set_contains(mu.group(), A, mu.atom()) ? 1 : 0);
        case MeasureType::haar_estimate: {
            Bracket b = mu.haar_evaluator().eval_bracket(A);
            if (b.lower == b.upper) return b.lower;
            if (b.upper.is_infinite()) return ExtNonneg::infinity();
            return ExtNonneg::finite(b.midpoint());
        }
    }
    throw std::logic_error("unreachable measure type");
}

Bracket measure_eval_bracket(const MeasureSpec& mu, const SetValue& A) {
    if (mu.type() == MeasureType::haar_estimate) return mu.haar_evaluator().eval_bracket(A);
    return Bracket::exact(measure_eval(mu, A));
}

// ---------------------------------------------------------------------
// simple functions
// ---------------------------------------------------------------------

namespace {

enum class Carrier { interval, finite, ints };

Carrier carrier_of(const SetValue& s) {
    if (std::holds_alternative<IntervalSet>(s)) return Carrier::interval;
    if (std::holds_alternative<FiniteSet>(s)) return Carrier::finite;
    return Carrier::ints;
}

struct PieceSortKey {
    int rank;  // cofinite sets sort last
    Rational at;
};

PieceSortKey sort_key(const SetValue& s) {
    if (const auto* is = std::get_if<IntervalSet>(&s)) return {0, is->intervals().front().first};
    if (const auto* fs = std::get_if<FiniteSet>(&s)) return {0, Rational(fs->elements().front())};
    const auto& z = std::get<IntSet>(s);
    if (z.cofinite) return {1, Rational(0)};
    return {0, Rational(static_cast<long long>(z.elems.front()))};
}

bool key_less(const PieceSortKey& a, const PieceSortKey& b) {
    if (a.rank != b.rank) return a.rank < b.rank;
    return a.at < b.at;
}

void validate_piece_set(const SetValue& s) {
    if (const auto* is = std::get_if<IntervalSet>(&s)) {
        if (is->kind() != Kind::half_open)
            throw std::invalid_argument("simple function: interval pieces must be half_open");
    }
}

template <typename Piece>
void canonicalize_pieces(std::vector<Piece>& pieces, bool drop_zero_values) {
    std::erase_if(pieces, [&](const Piece& p) {
        return sv_is_empty(p.set) || (drop_zero_values && p.value == decltype(p.value){});
    });
    for (const auto& p : pieces) validate_piece_set(p.set);
    for (std::size_t i = 0; i < pieces.size(); ++i)
        for (std::size_t j = i + 1; j < pieces.size(); ++j)
            if (!sv_disjoint(pieces[i].set, pieces[j].set))
                throw std::invalid_argument("simple function: pieces overlap");
    // merge equal values
    std::vector<Piece> merged;
    for (auto& p : pieces) {
        bool found = false;
        for (auto& m : merged)
            if (m.value == p.value) {
                m.set = sv_union(m.set, p.set);
                found = true;
                break;
            }
        if (!found) merged.push_back(std::move(p));
    }
    std::sort(merged.begin(), merged.end(), [](const Piece& a, const Piece& b) {
        return key_less(sort_key(a.set), sort_key(b.set));
    });
    pieces = std::move(merged);
}

}  // namespace

SimpleFunc::SimpleFunc(std::vector<Piece> pieces) {
    canonicalize_pieces(pieces, /*drop_zero_values=*/true);
    pieces_ = std::move(pieces);
}

SimpleFunc SimpleFunc::indicator(SetValue s) {
    return SimpleFunc({Piece{std::move(s), ExtNonneg::finite(1)}});
}

SimpleFunc SimpleFunc::scaled_indicator(ExtNonneg c, SetValue s) {
    return SimpleFunc({Piece{std::move(s), std::move(c)}});
}

std::string SimpleFunc::to_string() const {
    if (pieces_.empty()) return "0";
    std::string out;
    for (std::size_t i = 0; i < pieces_.size(); ++i) {
        if (i) out += " + ";
        out += pieces_[i].value.to_string() + "*chi_" + sv_to_string(pieces_[i].set);
    }
    return out;
}

StepFuncVec::StepFuncVec(std::size_t dim, std::vector<Piece> pieces) : dim_(dim) {
    for (const auto& p : pieces)
        if (p.value.dim() != dim) throw std::invalid_argument("step function: dimension mismatch");
    std::erase_if(pieces, [](const Piece& p) { return sv_is_empty(p.set) || p.value.is_zero(); });
    for (const auto& p : pieces) validate_piece_set(p.set);
    for (std::size_t i = 0; i < pieces.size(); ++i)
        for (std::size_t j = i + 1; j < pieces.size(); ++j)
            if (!sv_disjoint(pieces[i].set, pieces[j].set))
                throw std::invalid_argument("step function: pieces overlap");
    std::sort(pieces.begin(), pieces.end(), [](const Piece& a, const Piece& b) {
        return key_less(sort_key(a.set), sort_key(b.set));
    });
    pieces_ = std::move(pieces);
}

// ---------------------------------------------------------------------
// common refinement
// ---------------------------------------------------------------------

namespace {

struct Atom {
    SetValue set;
    std::vector<ExtNonneg> values;
};

ExtNonneg piece_value_at_set(const SimpleFunc& f, const SetValue& probe_atom);

// Atoms of the coarsest partition on which every function is constant.
// Functions must share one carrier; all-zero families yield no atoms.
std::vector<Atom> refine(const std::vector<const SimpleFunc*>& fs) {
    std::optional<Carrier> carrier;
    for (const auto* f : fs)
        for (const auto& p : f->pieces()) {
            Carrier c = carrier_of(p.set);
            if (carrier && *carrier != c)
                throw std::invalid_argument("simple functions: mixed carriers");
            carrier = c;
        }
    std::vector<Atom> atoms;
    if (!carrier) return atoms;

    auto value_on_atom = [&](const SimpleFunc& f, const SetValue& atom) -> ExtNonneg {
        for (const auto& p : f.pieces())
            if (sv_subset(atom, p.set)) return p.value;
        return ExtNonneg::finite(0);
    };

    if (*carrier == Carrier::interval) {
        std::vector<Rational> events;
        for (const auto* f : fs)
            for (const auto& p : f->pieces())
                for (const auto& [lo, hi] : std::get<IntervalSet>(p.set).intervals()) {
                    events.push_back(lo);
                    events.push_back(hi);
                }
        std::sort(events.begin(), events.end());
        events.erase(std::unique(events.begin(), events.end()), events.end());
        for (std::size_t i = 0; i + 1 < events.size(); ++i) {
            SetValue cell = IntervalSet::single(Kind::half_open, events[i], events[i + 1]);
            Atom a{cell, {}};
            bool any = false;
            for (const auto* f : fs) {
                ExtNonneg v = value_on_atom(*f, cell);
                any = any || !v.is_zero();
                a.values.push_back(v);
            }
            if (any) atoms.push_back(std::move(a));
        }
        return atoms;
    }

    if (*carrier == Carrier::finite) {
        int n = 0;
        for (const auto* f : fs)
            for (const auto& p : f->pieces()) n = std::get<FiniteSet>(p.set).carrier_size;
        for (int e = 0; e < n; ++e) {
            SetValue cell = FiniteSet::of(n, {e});
            Atom a{cell, {}};
            bool any = false;
            for (const auto* f : fs) {
                ExtNonneg v = value_on_atom(*f, cell);
                any = any || !v.is_zero();
                a.values.push_back(v);
            }
            if (any) atoms.push_back(std::move(a));
        }
        return atoms;
    }

    // integers: singletons for every mentioned point plus one cofinite rest
    std::vector<std::int64_t> mentioned;
    bool any_cofinite = false;
    for (const auto* f : fs)
        for (const auto& p : f->pieces()) {
            const auto& z = std::get<IntSet>(p.set);
            mentioned.insert(mentioned.end(), z.elems.begin(), z.elems.end());
            any_cofinite = any_cofinite || z.cofinite;
        }
    std::sort(mentioned.begin(), mentioned.end());
    mentioned.erase(std::unique(mentioned.begin(), mentioned.end()), mentioned.end());
    for (std::int64_t x : mentioned) {
        SetValue cell = IntSet::finite({x});
        Atom a{cell, {}};
        bool any = false;
        for (const auto* f : fs) {
            ExtNonneg v = value_on_atom(*f, cell);
            any = any || !v.is_zero();
            a.values.push_back(v);
        }
        if (any) atoms.push_back(std::move(a));
    }
    if (any_cofinite) {
        SetValue rest = IntSet::all_but(mentioned);
        Atom a{rest, {}};
        for (const auto* f : fs) {
            ExtNonneg v = ExtNonneg::finite(0);
            for (const auto& p : f->pieces()) {
                const auto& z = std::get<IntSet>(p.set);
                if (z.cofinite) v = p.value;  // at most one cofinite piece can exist
            }
            a.values.push_back(v);
        }
        atoms.push_back(std::move(a));
    }
    return atoms;
}

}  // namespace

SimpleFunc simple_add(const SimpleFunc& f, const SimpleFunc& g) {
    std::vector<SimpleFunc::Piece> pieces;
    for (const auto& a : refine({&f, &g}))
        pieces.push_back({a.set, a.values[0] + a.values[1]});
    return SimpleFunc(std::move(pieces));
}

SimpleFunc simple_scale(const ExtNonneg& c, const SimpleFunc& f) {
    std::vector<SimpleFunc::Piece> pieces;
    for (const auto& p : f.pieces()) pieces.push_back({p.set, c * p.value});
    return SimpleFunc(std::move(pieces));
}

SimpleFunc simple_pointwise_sup(const std::vector<SimpleFunc>& fs) {
    std::vector<const SimpleFunc*> ptrs;
    for (const auto& f : fs) ptrs.push_back(&f);
    std::vector<SimpleFunc::Piece> pieces;
    for (const auto& a : refine(ptrs)) {
        ExtNonneg m = ExtNonneg::finite(0);
        for (const auto& v : a.values)
            if (v > m) m = v;
        pieces.push_back({a.set, m});
    }
    return SimpleFunc(std::move(pieces));
}

bool simple_le(const SimpleFunc& f, const SimpleFunc& g) {
    for (const auto& a : refine({&f, &g}))
        if (!(a.values[0] <= a.values[1])) return false;
    return true;
}

ExtNonneg simple_value_at(const GroupSpec& G, const SimpleFunc& f, const Element& x) {
    for (const auto& p : f.pieces())
        if (set_contains(G, p.set, x)) return p.value;
    return ExtNonneg::finite(0);
}

SimpleFunc simple_invert_arg(const GroupSpec& G, const SimpleFunc& f) {
    std::vector<SimpleFunc::Piece> pieces;
    for (const auto& p : f.pieces()) pieces.push_back({g_invert_set(G, p.set), p.value});
    return SimpleFunc(std::move(pieces));
}

SimpleFunc norm_func(const StepFuncVec& f) {
    std::vector<SimpleFunc::Piece> pieces;
    for (const auto& p : f.pieces())
        pieces.push_back({p.set, ExtNonneg::finite(p.value.sup_norm())});
    return SimpleFunc(std::move(pieces));
}

ExtNonneg lintegral(const MeasureSpec& mu, const SimpleFunc& f) {
    ExtNonneg total = ExtNonneg::finite(0);
    for (const auto& p : f.pieces()) total = total + measure_eval(mu, p.set) * p.value;
    return total;
}

ExtNonneg lintegral_lower(const MeasureSpec& mu, const SimpleFunc& f) {
    ExtNonneg total = ExtNonneg::finite(0);
    for (const auto& p : f.pieces())
        total = total + measure_eval_bracket(mu, p.set).lower * p.value;
    return total;
}

VecQ bintegral(const MeasureSpec& mu, const StepFuncVec& f) {
    VecQ acc = VecQ::zero(f.dim());
    for (const auto& p : f.pieces()) {
        ExtNonneg m = measure_eval(mu, p.set);
        if (m.is_infinite()) continue;  // pieces of infinite measure are excluded
        acc += m.value() * p.value;
    }
    return acc;
}

bool integrable_check(const MeasureSpec& mu, const StepFuncVec& f) {
    return lintegral(mu, norm_func(f)).is_finite();
}

CheckReport left_invariance_check(const MeasureSpec& mu, const std::vector<InvarianceCase>& cases) {
    CheckReport report("left_invariance");
    const GroupSpec& G = mu.group();
    for (const auto& c : cases) {
        auto& rec = report.add_case("g=" + element_to_string(c.g));
        SetValue translated = g_translate_set(G, G.inv(c.g), c.A);
        Bracket lhs = measure_eval_bracket(mu, translated);
        Bracket rhs = measure_eval_bracket(mu, c.A);
        rec.field("translated", lhs);
        rec.field("original", rhs);
        bool ok = lhs.is_exact() && rhs.is_exact()
                      ? lhs.lower == rhs.lower
                      : !(lhs.upper < rhs.lower || rhs.upper < lhs.lower);  // bracket overlap
        if (!ok) rec.verdict = Verdict::fail;
    }
    return report;
}

namespace {

SetValue sv_fatten(const SetValue& s, const Rational& eps) {
    return iset_fatten(std::get<IntervalSet>(s), eps);
}
SetValue sv_shrink(const SetValue& s, const Rational& eps) {
    return iset_shrink(std::get<IntervalSet>(s), eps);
}

// Convergence verdict for a one-sided bracket sequence: the gap must
// close, or at least strictly improve over the schedule.
bool bracket_converged(const ExtNonneg& gap_first, const ExtNonneg& gap_last) {
    return gap_last.is_zero() || gap_last < gap_first;
}

}  // namespace

CheckReport regular_check(const MeasureSpec& mu, const std::vector<SetValue>& compacts,
                          const std::vector<SetValue>& opens,
                          const std::vector<SetValue>& measurables, const EpsSchedule& schedule) {
    CheckReport report("regular");
    const GroupSpec& G = mu.group();

    for (const auto& K : compacts) {
        auto& rec = report.add_case("compact_finite");
        if (!is_compact_set(G, K)) throw std::domain_error("regular_check: set is not compact");
        Bracket v = measure_eval_bracket(mu, K);
        rec.field("measure", v);
        if (v.upper.is_infinite()) rec.verdict = Verdict::fail;
    }

    for (const auto& A : measurables) {
        auto& rec = report.add_case("outer_bracket");
        ExtNonneg target = measure_eval(mu, A);
        rec.field("measure", target);
        if (G.is_discrete()) {
            rec.field("gap", ExtNonneg::finite(0));  // every discrete set is clopen
            continue;
        }
        ExtNonneg first_gap, last_gap;
        bool monotone = true;
        ExtNonneg prev;
        for (int j = 1; j <= schedule.k_max; ++j) {
            ExtNonneg v = measure_eval(mu, sv_fatten(A, schedule.eps(j)));
            if (j > 1 && v > prev) monotone = false;
            if (v < target) monotone = false;  // an open superset can never lose mass
            ExtNonneg gap = ext_abs_diff(v, target);
            if (j == 1) first_gap = gap;
            if (j == schedule.k_max) last_gap = gap;
            prev = v;
        }
        rec.field("gap", last_gap);
        if (!monotone || !bracket_converged(first_gap, last_gap)) rec.verdict = Verdict::fail;
    }

    for (const auto& U : opens) {
        auto& rec = report.add_case("inner_bracket");
        if (!is_open_set(G, U)) throw std::domain_error("regular_check: set is not open");
        ExtNonneg target = measure_eval(mu, U);
        rec.field("measure", target);
        if (G.is_discrete()) {
            rec.field("gap", ExtNonneg::finite(0));
            continue;
        }
        ExtNonneg first_gap, last_gap;
        bool monotone = true;
        ExtNonneg prev = ExtNonneg::finite(0);
        for (int j = 1; j <= schedule.k_max; ++j) {
            ExtNonneg v = measure_eval(mu, sv_shrink(U, schedule.eps(j)));
            if (j > 1 && v < prev) monotone = false;
            if (v > target) monotone = false;  // compact subsets can never gain mass
            ExtNonneg gap = ext_abs_diff(v, target);
            if (j == 1) first_gap = gap;
            if (j == schedule.k_max) last_gap = gap;
            prev = v;
        }
        rec.field("gap", last_gap);
        if (!monotone || !bracket_converged(first_gap, last_gap)) rec.verdict = Verdict::fail;
    }
    return report;
}

CheckReport positivity_check(const MeasureSpec& mu, const SetValue& U, const SimpleFunc& f) {
    CheckReport report("positivity");
    const GroupSpec& G = mu.group();
    if (!is_open_set(G, U) || sv_is_empty(U))
        throw std::domain_error("positivity_check: U must be a nonempty open set");

    // minorant constant: the smallest value f takes on U (measure-canonical
    // on the continuous carriers)
    SetValue U_meas = U;
    if (G.is_continuous()) U_meas = std::get<IntervalSet>(U).rekind(Kind::half_open);
    SimpleFunc indicator = SimpleFunc::indicator(U_meas);
    ExtNonneg c = ExtNonneg::infinity();
    for (const auto& a : refine({&f, &indicator})) {
        if (a.values[1].is_zero()) continue;  // atom outside U
        if (a.values[0] < c) c = a.values[0];
    }
    if (c.is_zero())
        throw std::domain_error("positivity_check: f is not minorized on U by a positive constant");

    auto& rec = report.add_case("positivity");
    ExtNonneg mu_U_lower = measure_eval_bracket(mu, U).lower;
    ExtNonneg integral_lower = lintegral_lower(mu, f);
    rec.field("minorant", c);
    rec.field("mu_U_lower", mu_U_lower);
    rec.field("lintegral_lower", integral_lower);
    bool ok = mu_U_lower > ExtNonneg::finite(0) && integral_lower >= c * mu_U_lower &&
              integral_lower > ExtNonneg::finite(0);
    if (!ok) rec.verdict = Verdict::fail;
    return report;
}

ExtNonneg inv_measure_eval(const MeasureSpec& mu, const SetValue& A) {
    const GroupSpec& G = mu.group();
    if (mu.type() == MeasureType::dirac) {
        // pointwise: boundary re-canonicalization must not move the atom
        return ExtNonneg::finite(set_contains(G, A, G.inv(mu.atom())) ? 1 : 0);
    }
    return measure_eval(mu, g_invert_set(G, A));
}

CheckReport monotone_convergence_check(const MeasureSpec& mu, const std::vector<SimpleFunc>& chain,
                                       const std::optional<SimpleFunc>& limit,
                                       const std::optional<ExtNonneg>& gap_bound) {
    if (chain.empty()) throw std::domain_error("monotone_convergence_check: empty chain");
    for (std::size_t i = 0; i + 1 < chain.size(); ++i)
        if (!simple_le(chain[i], chain[i + 1]))
            throw std::domain_error("monotone_convergence_check: chain is not pointwise monotone");
    if (limit && !simple_le(chain.back(), *limit))
        throw std::domain_error("monotone_convergence_check: limit does not dominate the chain");

    CheckReport report("monotone_convergence");
    auto& rec = report.add_case("chain");
    ExtNonneg prev;
    bool integrals_monotone = true;
    ExtNonneg last_integral;
    for (std::size_t i = 0; i < chain.size(); ++i) {
        ExtNonneg v = lintegral(mu, chain[i]);
        if (i > 0 && v < prev) integrals_monotone = false;
        prev = v;
        last_integral = v;
    }
    const SimpleFunc& sup = limit ? *limit : chain.back();
    ExtNonneg sup_integral = lintegral(mu, sup);
    ExtNonneg gap = ext_abs_diff(sup_integral, last_integral);
    rec.field("integral_at_tail", last_integral);
    rec.field("integral_of_sup", sup_integral);
    rec.field("gap", gap);
    bool ok = integrals_monotone;
    if (!limit) ok = ok && gap.is_zero();  // stabilized chain: exact equality
    if (gap_bound) ok = ok && gap <= *gap_bound;
    if (!ok) rec.verdict = Verdict::fail;
    return report;
}

}  // namespace exm
