#include "comparo/decide.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "comparo/errors.hpp"
#include "comparo/semantics.hpp"
#include "json.hpp"

namespace comparo {

bool holds_under(const Formula& f, const std::vector<std::string>& ls, std::size_t bits) {
  switch (f.kind()) {
    case Formula::Kind::Atom: {
      auto it = std::lower_bound(ls.begin(), ls.end(), f.name());
      if (it != ls.end() && *it == f.name()) return (bits >> static_cast<std::size_t>(it - ls.begin())) & 1u;
      for (std::size_t i = 0; i < ls.size(); ++i)
        if (ls[i] == f.name()) return (bits >> i) & 1u;
      return false;
    }
    case Formula::Kind::Top:
      return true;
    case Formula::Kind::Bot:
      return false;
    case Formula::Kind::Not:
      return !holds_under(f.lhs(), ls, bits);
    case Formula::Kind::And:
      return holds_under(f.lhs(), ls, bits) && holds_under(f.rhs(), ls, bits);
    case Formula::Kind::Geq:
      throw Error("holds_under expects a formula of modal depth 0");
  }
  return false;
}

MeasureLPOutcome solve_measure_lp(const MeasureLP& lp) {
  if (lp.letters.size() > kLetterCap) {
    throw CapacityError("measure LP over " + std::to_string(lp.letters.size()) + " letters exceeds the cap of " +
                        std::to_string(kLetterCap));
  }
  const std::size_t n = lp.variable_count();
  const bool has_slack = !lp.strict.empty();
  const std::size_t vars = n + (has_slack ? 1 : 0);

  auto indicator = [&](const Formula& a, const Formula& b) {
    std::vector<Rational> row(vars, Rational(0));
    for (std::size_t v = 0; v < n; ++v) {
      int c = static_cast<int>(holds_under(a, lp.letters, v)) - static_cast<int>(holds_under(b, lp.letters, v));
      row[v] = c;
    }
    return row;
  };

  MeasureLPOutcome out;
  LinearProgram& prog = out.program;
  prog.variables = vars;
  for (const auto& [a, b] : lp.nonstrict) prog.add_row(indicator(a, b), LinearProgram::Relation::GreaterEq, 0);
  for (const auto& [a, b] : lp.strict) {
    auto row = indicator(a, b);
    row[n] = -1;
    prog.add_row(std::move(row), LinearProgram::Relation::GreaterEq, 0);
  }
  std::vector<Rational> norm(vars, Rational(1));
  if (has_slack) norm[n] = 0;
  prog.add_row(std::move(norm), LinearProgram::Relation::Equal, 1);
  prog.objective.assign(vars, Rational(0));
  if (has_slack) prog.objective[n] = 1;

  out.result = solve(prog);
  if (out.result.status != LpResult::Status::Optimal) return out;
  if (has_slack && sgn(out.result.value) <= 0) return out;

  ValuationMeasure mu{lp.letters, std::vector<Rational>(out.result.x.begin(), out.result.x.begin() + static_cast<long>(n))};
  for (const auto& w : mu.weights) out.max_bit_size = std::max(out.max_bit_size, bit_size(w));
  out.measure = std::move(mu);
  return out;
}

std::optional<ValuationMeasure> lp_feasible_strict(const MeasureLP& lp) { return solve_measure_lp(lp).measure; }

bool within_witness_bounds(const SatResult& r) {
  if (!r.witness) return true;
  const std::size_t len = r.formula_length;
  return r.witness->space().size() <= kWitnessStatesFactor * len * len &&
         r.witness->measures().size() <= kWitnessMeasuresFactor * len;
}

namespace {

std::vector<std::string> disjunct_letters(const GuardedDisjunct& d) {
  std::set<std::string> ls;
  for (const auto* list : {&d.positives, &d.negatives}) {
    for (const auto& [a, b] : *list) {
      for (const auto& x : atoms(a)) ls.insert(x);
      for (const auto& x : atoms(b)) ls.insert(x);
    }
  }
  return {ls.begin(), ls.end()};
}

struct Fragment {
  std::vector<std::size_t> valuations;  // positive-weight valuations
  std::vector<Rational> weights;
};

MultiMeasureModel assemble_witness(const Formula& f, const GuardedDisjunct& d, const std::vector<std::string>& ls,
                                   const std::vector<ValuationMeasure>& measures, std::string& designated) {
  std::vector<std::string> ids;
  std::vector<std::size_t> state_bits;
  std::vector<Fragment> frags;
  for (const auto& mu : measures) {
    Fragment fr;
    for (std::size_t v = 0; v < mu.weights.size(); ++v) {
      if (sgn(mu.weights[v]) > 0) {
        fr.valuations.push_back(v);
        fr.weights.push_back(mu.weights[v]);
      }
    }
    frags.push_back(std::move(fr));
  }

  std::vector<std::vector<Rational>> weights(frags.size());
  for (std::size_t j = 0; j < frags.size(); ++j) {
    for (std::size_t i = 0; i < frags[j].valuations.size(); ++i) {
      ids.push_back("w" + std::to_string(ids.size() + 1));
      state_bits.push_back(frags[j].valuations[i]);
      for (std::size_t k = 0; k < frags.size(); ++k) weights[k].push_back(k == j ? frags[j].weights[i] : Rational(0));
    }
  }

  const std::set<std::string> all_atoms = atoms(f);
  // Letters outside the comparisons can be set freely at the designated
  // state, so only residue literals over `ls` constrain the choice.
  auto in_ls = [&](const std::string& atom) { return std::find(ls.begin(), ls.end(), atom) != ls.end(); };
  auto satisfies_residue = [&](std::size_t bits) {
    for (const auto& [atom, positive] : d.literals) {
      if (!in_ls(atom)) continue;
      const auto i = static_cast<std::size_t>(std::find(ls.begin(), ls.end(), atom) - ls.begin());
      if ((((bits >> i) & 1u) != 0) != positive) return false;
    }
    return true;
  };

  std::optional<std::size_t> chosen;
  for (std::size_t s = 0; s < ids.size() && !chosen; ++s)
    if (satisfies_residue(state_bits[s])) chosen = s;

  Valuation v;
  for (const auto& a : all_atoms) v.emplace(a, StateSet(ids.size() + (chosen ? 0 : 1)));
  for (std::size_t s = 0; s < ids.size(); ++s) {
    for (std::size_t i = 0; i < ls.size(); ++i)
      if ((state_bits[s] >> i) & 1u) v[ls[i]].insert(s);
  }
  if (chosen) {
    designated = ids[*chosen];
    for (const auto& [atom, positive] : d.literals)
      if (positive && !in_ls(atom)) v[atom].insert(*chosen);
  } else {
    // Zero-weight state realizing the residue; unmentioned letters false.
    const std::size_t s = ids.size();
    ids.push_back("d");
    for (const auto& [atom, positive] : d.literals)
      if (positive) v[atom].insert(s);
    for (auto& w : weights) w.push_back(0);
    designated = "d";
  }
  return MultiMeasureModel(StateSpace(ids), std::move(weights), std::move(v));
}

std::string render_pairs(const GuardedDisjunct& d) { return render(d.to_formula()); }

}  // namespace

SatResult sat_ip(const Formula& f, const SatOptions& options) {
  SatResult result;
  result.formula_length = length(f);
  auto dnf = to_guarded_dnf(f);
  result.disjuncts = dnf.size();

  std::vector<std::size_t> order(dnf.size());
  std::iota(order.begin(), order.end(), 0);
  std::vector<std::size_t> letter_count(dnf.size());
  for (std::size_t i = 0; i < dnf.size(); ++i) letter_count[i] = disjunct_letters(dnf[i]).size();
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return std::pair(dnf[a].negatives.size(), letter_count[a]) < std::pair(dnf[b].negatives.size(), letter_count[b]);
  });

  for (std::size_t idx : order) {
    const GuardedDisjunct& d = dnf[idx];
    const auto ls = disjunct_letters(d);
    if (ls.size() > options.letter_cap) {
      throw CapacityError("disjunct over " + std::to_string(ls.size()) + " letters exceeds the cap of " +
                          std::to_string(options.letter_cap));
    }

    std::vector<MeasureLP> lps;
    auto base = [&] {
      MeasureLP lp;
      lp.letters = ls;
      lp.nonstrict = d.positives;
      return lp;
    };
    if (options.single_measure || d.negatives.empty()) {
      MeasureLP lp = base();
      // not (a >= b) asks for mu(b) > mu(a).
      for (const auto& [a, b] : d.negatives) lp.strict.emplace_back(b, a);
      lps.push_back(std::move(lp));
    } else {
      for (const auto& [a, b] : d.negatives) {
        MeasureLP lp = base();
        lp.strict.emplace_back(b, a);
        lps.push_back(std::move(lp));
      }
    }

    std::vector<ValuationMeasure> measures;
    std::optional<DisjunctRefutation> refutation;
    std::size_t bits = 0;
    for (std::size_t j = 0; j < lps.size() && !refutation; ++j) {
      auto outcome = solve_measure_lp(lps[j]);
      if (outcome.measure) {
        bits = std::max(bits, outcome.max_bit_size);
        measures.push_back(std::move(*outcome.measure));
        continue;
      }
      DisjunctRefutation r;
      r.disjunct = idx;
      r.formula = render_pairs(d);
      if (!options.single_measure && !d.negatives.empty()) r.negation = j;
      r.reason = outcome.result.status == LpResult::Status::Infeasible ? "positives-infeasible" : "strict-unattainable";
      r.program = std::move(outcome.program);
      r.certificate = std::move(outcome.result.dual);
      refutation = std::move(r);
    }
    if (refutation) {
      result.trace.push_back(std::move(*refutation));
      continue;
    }

    std::string designated;
    MultiMeasureModel witness = assemble_witness(f, d, ls, measures, designated);
    if (!validate(witness).empty() || !eval(AnyModel(witness), Semantics::MultiMeasure, designated, f)) {
      throw std::logic_error("internal: assembled witness does not satisfy " + render(f));
    }
    result.status = SatResult::Status::Sat;
    result.witness = std::move(witness);
    result.designated_state = designated;
    result.max_weight_bits = bits;
    result.trace.clear();
    return result;
  }
  result.status = SatResult::Status::Unsat;
  return result;
}

ValidResult valid_ip(const Formula& f, const SatOptions& options) {
  ValidResult r;
  r.negation = sat_ip(Formula::neg(f), options);
  r.valid = !r.negation.sat();
  return r;
}

std::string describe_trace(const SatResult& r) {
  std::ostringstream os;
  if (r.sat()) return "satisfiable\n";
  if (r.disjuncts == 0) {
    os << "no disjuncts: the Boolean skeleton is contradictory\n";
    return os.str();
  }
  for (const auto& ref : r.trace) {
    os << "disjunct " << ref.disjunct << ": " << ref.formula << "\n  ";
    if (ref.reason == "positives-infeasible") {
      os << "no probability measure satisfies the positive comparisons (Farkas certificate over "
         << ref.certificate.size() << " rows)";
    } else {
      os << "maximal slack is 0";
      if (ref.negation) os << " for negated comparison #" << *ref.negation;
      os << " (dual bound over " << ref.certificate.size() << " rows)";
    }
    os << "\n";
  }
  return os.str();
}

std::string trace_json(const SatResult& r) {
  nlohmann::ordered_json j;
  j["status"] = r.sat() ? "SAT" : "UNSAT";
  j["disjuncts"] = r.disjuncts;
  nlohmann::ordered_json list = nlohmann::ordered_json::array();
  for (const auto& ref : r.trace) {
    nlohmann::ordered_json e;
    e["disjunct"] = ref.disjunct;
    e["formula"] = ref.formula;
    e["reason"] = ref.reason;
    if (ref.negation) e["negation"] = *ref.negation;
    nlohmann::ordered_json cert = nlohmann::ordered_json::array();
    for (const auto& y : ref.certificate) cert.push_back(format_rational(y));
    e["certificate"] = cert;
    list.push_back(e);
  }
  j["refutations"] = list;
  return j.dump(2) + "\n";
}

// ---------------------------------------------------------------------------
// Exhaustive preferential search

const std::vector<std::vector<std::pair<StateIndex, StateIndex>>>& preorder_shapes(std::size_t k) {
  if (k == 0 || k > kOracleMaxStates) throw CapacityError("preorder shapes are tabulated for 1..4 points");
  static const auto table = [] {
    std::vector<std::vector<std::vector<std::pair<StateIndex, StateIndex>>>> t(kOracleMaxStates + 1);
    for (std::size_t n = 1; n <= kOracleMaxStates; ++n) {
      std::vector<std::pair<std::size_t, std::size_t>> off;
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          if (i != j) off.emplace_back(i, j);
      auto bit = [n](std::size_t i, std::size_t j) { return std::uint32_t{1} << (i * n + j); };
      std::uint32_t diag = 0;
      for (std::size_t i = 0; i < n; ++i) diag |= bit(i, i);

      std::vector<std::size_t> perm(n);
      std::set<std::uint32_t> canon;
      for (std::uint32_t mask = 0; mask < (1u << off.size()); ++mask) {
        std::uint32_t rel = diag;
        for (std::size_t e = 0; e < off.size(); ++e)
          if ((mask >> e) & 1u) rel |= bit(off[e].first, off[e].second);
        bool transitive = true;
        for (std::size_t a = 0; a < n && transitive; ++a)
          for (std::size_t b = 0; b < n && transitive; ++b)
            for (std::size_t c = 0; c < n && transitive; ++c)
              if ((rel & bit(a, b)) && (rel & bit(b, c)) && !(rel & bit(a, c))) transitive = false;
        if (!transitive) continue;
        std::iota(perm.begin(), perm.end(), 0);
        std::uint32_t best = ~0u;
        do {
          std::uint32_t img = 0;
          for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b)
              if (rel & bit(a, b)) img |= bit(perm[a], perm[b]);
          best = std::min(best, img);
        } while (std::next_permutation(perm.begin(), perm.end()));
        canon.insert(best);
      }
      for (auto rel : canon) {
        std::vector<std::pair<StateIndex, StateIndex>> pairs;
        for (std::size_t a = 0; a < n; ++a)
          for (std::size_t b = 0; b < n; ++b)
            if (rel & bit(a, b)) pairs.emplace_back(a, b);
        t[n].push_back(std::move(pairs));
      }
    }
    return t;
  }();
  return table[k];
}

std::optional<PreferentialWitness> enumerate_sat_preferential(const Formula& f, std::size_t max_states) {
  const auto atom_set = atoms(f);
  if (atom_set.size() > kOracleMaxAtoms) {
    throw CapacityError("preferential search handles at most " + std::to_string(kOracleMaxAtoms) + " atoms");
  }
  if (max_states == 0 || max_states > kOracleMaxStates) {
    throw CapacityError("preferential search handles 1.." + std::to_string(kOracleMaxStates) + " states");
  }
  const std::vector<std::string> ls(atom_set.begin(), atom_set.end());
  const std::size_t vals = std::size_t{1} << ls.size();

  for (std::size_t k = 1; k <= max_states; ++k) {
    // States outside the field only matter through their own valuation, so
    // one model carrying every outside valuation at once covers all ways of
    // adding a single outside designated state.
    const std::size_t outside = k < max_states ? vals : 0;
    const std::size_t n = k + outside;
    std::vector<std::string> ids;
    for (std::size_t i = 0; i < k; ++i) ids.push_back("w" + std::to_string(i + 1));
    for (std::size_t i = 0; i < outside; ++i) ids.push_back("x" + std::to_string(i + 1));
    const StateSpace space(ids);
    StateSet field(n);
    for (std::size_t i = 0; i < k; ++i) field.insert(i);

    Valuation base;
    for (const auto& l : ls) base.emplace(l, StateSet(n));
    for (std::size_t o = 0; o < outside; ++o)
      for (std::size_t i = 0; i < ls.size(); ++i)
        if ((o >> i) & 1u) base[ls[i]].insert(k + o);

    std::size_t total = 1;
    for (std::size_t i = 0; i < k; ++i) total *= vals;
    for (const auto& shape : preorder_shapes(k)) {
      auto pre = std::make_shared<const Preorder>(closure(n, field, shape));
      for (std::size_t code = 0; code < total; ++code) {
        Valuation v = base;
        std::size_t c = code;
        for (std::size_t s = 0; s < k; ++s, c /= vals) {
          const std::size_t bits = c % vals;
          for (std::size_t i = 0; i < ls.size(); ++i)
            if ((bits >> i) & 1u) v[ls[i]].insert(s);
        }
        PreferentialModel m(space, field, shape, std::move(v), pre);
        const StateSet sat = satisfying_states(m, Semantics::Injection, f);
        if (sat.empty()) continue;
        const StateIndex w = sat.members().front();
        if (w < k) return PreferentialWitness{std::move(m), ids[w]};

        // Keep the field plus the one outside state.
        std::vector<std::string> kept(ids.begin(), ids.begin() + static_cast<long>(k));
        kept.push_back("x");
        StateSet small_field(k + 1);
        for (std::size_t i = 0; i < k; ++i) small_field.insert(i);
        Valuation sv;
        for (const auto& [atom, set] : m.valuation()) {
          StateSet t(k + 1);
          for (std::size_t i = 0; i < k; ++i) t.set(i, set.contains(i));
          t.set(k, set.contains(w));
          sv.emplace(atom, std::move(t));
        }
        return PreferentialWitness{PreferentialModel(StateSpace(kept), small_field, shape, std::move(sv)), "x"};
      }
    }
  }
  return std::nullopt;
}

}  // namespace comparo
