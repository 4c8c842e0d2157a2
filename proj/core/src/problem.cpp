#include "hs/problem.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace hs {

using json = nlohmann::ordered_json;

namespace {

ProblemSpec spec_from_json(const json& j) {
    ProblemSpec spec;
    if (!j.is_object()) throw input_error("problem file must be a JSON object");
    if (!j.contains("characteristic") || !j["characteristic"].is_number_unsigned())
        throw input_error("missing or invalid 'characteristic'");
    spec.characteristic = j["characteristic"].get<std::uint32_t>();
    if (!j.contains("variables") || !j["variables"].is_array() || j["variables"].empty())
        throw input_error("missing or empty 'variables'");
    for (const auto& v : j["variables"]) spec.variables.push_back(v.get<std::string>());
    if (j.contains("ideal")) {
        if (!j["ideal"].is_array()) throw input_error("'ideal' must be an array of strings");
        for (const auto& f : j["ideal"]) spec.ideal.push_back(f.get<std::string>());
    }
    if (j.contains("order")) spec.order = j["order"].get<std::string>();
    if (j.contains("derivation")) {
        if (!j["derivation"].is_object())
            throw input_error("'derivation' must map variables to polynomial strings");
        spec.has_derivation = true;
        for (auto it = j["derivation"].begin(); it != j["derivation"].end(); ++it)
            spec.derivation[it.key()] = it.value().get<std::string>();
    }
    if (j.contains("delta")) spec.delta = j["delta"].get<std::string>();
    if (j.contains("primes")) {
        for (const auto& p : j["primes"]) {
            WitnessSpec w;
            for (const auto& g : p.at("generators")) w.generators.push_back(g.get<std::string>());
            if (p.contains("height")) w.height = p["height"].get<int>();
            if (p.contains("purpose")) w.purpose = p["purpose"].get<std::string>();
            spec.primes.push_back(std::move(w));
        }
    }
    if (j.contains("assertions")) {
        const auto& a = j["assertions"];
        if (a.contains("complete_intersection"))
            spec.assertions.complete_intersection = a["complete_intersection"].get<bool>();
        if (a.contains("radical")) spec.assertions.radical = a["radical"].get<bool>();
        if (a.contains("equidimensional_codim"))
            spec.assertions.equidimensional_codim = a["equidimensional_codim"].get<int>();
    }
    if (j.contains("hs")) {
        for (const auto& row : j["hs"]) {
            std::map<std::string, std::string> r;
            for (auto it = row.begin(); it != row.end(); ++it)
                r[it.key()] = it.value().get<std::string>();
            spec.hs_rows.push_back(std::move(r));
        }
    }
    return spec;
}

// Materialized problem: exact objects ready for the engines.
struct ProblemData {
    RingPtr ring;
    MonomialOrder order;
    AlgebraPtr algebra;
    std::optional<std::vector<Polynomial>> derivation;
    std::optional<Polynomial> delta;
    std::vector<PrimeWitness> witnesses;
};

ProblemData materialize(const ProblemSpec& spec, const Flags& flags, Budget* budget) {
    ProblemData data;
    Field field = spec.characteristic == 0 ? Field::rationals()
                                           : Field::prime(spec.characteristic);
    data.ring = make_ring(field, spec.variables);
    data.order = MonomialOrder::from_name(flags.order.value_or(spec.order));

    std::vector<Polynomial> gens;
    for (const std::string& s : spec.ideal)
        gens.push_back(parse_polynomial(data.ring, s, data.order));
    data.algebra = make_algebra(data.ring, gens, data.order, budget);

    if (spec.has_derivation) {
        std::vector<Polynomial> dv;
        for (std::size_t i = 0; i < data.ring->nvars(); ++i) {
            auto it = spec.derivation.find(data.ring->variable(i));
            dv.push_back(it == spec.derivation.end()
                             ? Polynomial::zero(data.ring, data.order)
                             : parse_polynomial(data.ring, it->second, data.order));
        }
        for (const auto& [key, value] : spec.derivation)
            if (!data.ring->variable_index(key))
                throw input_error("derivation names unknown variable: " + key);
        data.derivation = std::move(dv);
    }
    if (spec.delta) data.delta = parse_polynomial(data.ring, *spec.delta, data.order);
    for (const WitnessSpec& w : spec.primes) {
        std::vector<Polynomial> pg;
        for (const std::string& s : w.generators)
            pg.push_back(parse_polynomial(data.ring, s, data.order));
        data.witnesses.emplace_back(data.ring, std::move(pg), w.height, budget);
    }
    return data;
}

json poly_list(const std::vector<Polynomial>& ps) {
    json out = json::array();
    for (const Polynomial& p : ps) out.push_back(p.str());
    return out;
}

json vector_by_variable(const RingPtr& ring, const std::vector<Polynomial>& v) {
    json out = json::object();
    for (std::size_t i = 0; i < ring->nvars(); ++i) out[ring->variable(i)] = v[i].str();
    return out;
}

json hs_table_json(const HSDerivation& D) {
    json rows = json::array();
    for (std::size_t mu = 1; mu <= D.length(); ++mu) {
        json row = json::object();
        for (std::size_t i = 0; i < D.algebra()->nvars(); ++i)
            row[D.algebra()->ring()->variable(i)] = D.xi(mu, i).str();
        rows.push_back(std::move(row));
    }
    return rows;
}

json transcript_json(const Transcript& T) {
    json out = json::array();
    for (const CheckEntry& e : T.checks) {
        json c = json::object();
        c["check"] = e.name;
        c["pass"] = e.pass;
        if (!e.detail.empty()) c["detail"] = e.detail;
        out.push_back(std::move(c));
    }
    return out;
}

// Parse an HS table from the problem's "hs" rows over the given algebra.
HSDerivation table_from_spec(const ProblemSpec& spec, const ProblemData& data) {
    if (spec.hs_rows.empty()) throw input_error("this verb needs an 'hs' table in the problem");
    std::vector<std::vector<Polynomial>> xi;
    for (const auto& row : spec.hs_rows) {
        std::vector<Polynomial> prow;
        for (std::size_t i = 0; i < data.ring->nvars(); ++i) {
            auto it = row.find(data.ring->variable(i));
            prow.push_back(it == row.end()
                               ? Polynomial::zero(data.ring, data.order)
                               : parse_polynomial(data.ring, it->second, data.order));
        }
        for (const auto& [key, value] : row)
            if (!data.ring->variable_index(key))
                throw input_error("hs row names unknown variable: " + key);
        xi.push_back(std::move(prow));
    }
    const std::size_t m = xi.size();
    return HSDerivation(data.algebra, m, std::move(xi), false);
}

std::string render_text(const json& report) {
    std::ostringstream os;
    os << "verb: " << report["verb"].get<std::string>() << "\n";
    os << "status: " << report["status"].get<std::string>() << "\n";
    if (report.contains("error")) os << "error: " << report["error"].get<std::string>() << "\n";
    if (report.contains("results")) os << "results: " << report["results"].dump(2) << "\n";
    if (report.contains("verification")) {
        std::size_t passed = 0, total = 0;
        for (const auto& c : report["verification"]) {
            ++total;
            if (c["pass"].get<bool>()) ++passed;
        }
        os << "verification: " << passed << "/" << total << " checks passed\n";
        for (const auto& c : report["verification"])
            if (!c["pass"].get<bool>())
                os << "  FAIL " << c["check"].get<std::string>() << "\n";
    }
    return os.str();
}

json run_integrate(const ProblemSpec& spec, const ProblemData& data, const Flags& flags,
                   Budget& bud) {
    if (!data.derivation) throw input_error("integrate needs a 'derivation'");
    std::string method = flags.method;
    if (method == "auto") {
        if (spec.assertions.complete_intersection)
            method = "ci";
        else if (spec.assertions.equidimensional_codim)
            method = "equidim";
        else if (spec.assertions.radical && !data.witnesses.empty())
            method = "reduced";
        else
            throw input_error(
                "cannot choose a method: assert complete_intersection, "
                "equidimensional_codim, or radical with primes");
    }

    ExtensionResult res;
    if (method == "ci") {
        res = integrate_ci(data.algebra, *data.derivation, flags.max_order, &bud);
    } else if (method == "equidim") {
        if (!data.delta) throw input_error("equidim integration needs 'delta'");
        res = integrate_equidim(data.algebra, *data.derivation, *data.delta, data.witnesses,
                                flags.max_order, std::nullopt, &bud);
    } else if (method == "reduced") {
        if (!data.delta) throw input_error("reduced integration needs 'delta'");
        res = integrate_reduced(data.algebra, *data.derivation, *data.delta, data.witnesses,
                                flags.max_order, &bud);
    } else {
        throw input_error("unknown method: " + method);
    }

    json out = json::object();
    out["method"] = method_name(res.method);
    out["outcome"] = outcome_name(res.outcome);
    out["order"] = res.reached_order;
    if (res.witness) out["hs"] = hs_table_json(*res.witness);
    out["transcript"] = transcript_json(res.transcript);
    return out;
}

json leap_entry_json(const RingPtr& ring, const LeapEntry& e) {
    json le = json::object();
    le["order"] = e.order;
    le["power_of_p"] = e.power_of_p;
    le["witness_derivation"] = vector_by_variable(ring, e.witness_delta);
    if (e.witness_integral) le["witness_integral"] = hs_table_json(*e.witness_integral);
    le["obstruction"] = e.obstruction_note;
    return le;
}

json run_leaps(const ProblemSpec& spec, const ProblemData& data, const Flags& flags,
               Budget& bud) {
    (void)spec;
    LeapReport rep;
    if (flags.mode == "exact") {
        ArtinianModel M = artinian_model(data.algebra);
        rep = leap_scan(M, flags.max_order, &bud);
    } else if (flags.mode == "degree-bounded") {
        rep = leap_scan_degree_bounded(data.algebra, data.derivation, flags.max_order,
                                       flags.degree_bound.value_or(3), &bud);
    } else {
        throw input_error("unknown mode: " + flags.mode);
    }
    json out = json::object();
    out["bound"] = rep.bound;
    out["characteristic"] = rep.characteristic;
    out["certification"] =
        rep.exact ? std::string("exact")
                  : "degree-bounded(" + std::to_string(rep.degree_bound) + ")";
    out["complete"] = rep.complete;
    if (!rep.note.empty()) out["note"] = rep.note;
    json ls = json::array();
    for (const LeapEntry& e : rep.leaps) ls.push_back(leap_entry_json(data.ring, e));
    out["leaps"] = std::move(ls);
    if (rep.exact) out["ider_dims"] = rep.ider_dims;
    out["all_leaps_powers_of_p"] = rep.all_leaps_powers_of_p();
    return out;
}

json run_fitting(const ProblemData& data, const Flags& flags, Budget& bud) {
    if (!flags.ell) throw input_error("fitting needs --ell");
    FittingIdeal J = fitting_ideal(*data.algebra, *flags.ell, &bud);
    json out = json::object();
    out["level"] = J.level;
    out["generators"] = poly_list(J.generators());
    out["lifted_generators"] = poly_list(J.lifted_generators());
    return out;
}

json run_genericgens(const ProblemData& data, Budget& bud, Transcript& T) {
    if (data.witnesses.empty()) throw input_error("genericgens needs prime witnesses");
    GenericGenerators gg = generic_generators(data.algebra->ideal(), data.witnesses, &bud);
    JacobianMatrix JF = jacobian(gg.selected);
    json ranks = json::array();
    for (const PrimeWitness& P : data.witnesses) {
        int rk = rank_at_prime(JF, P, &bud);
        T.require("rank equals the witness height", rk == P.height());
        json e = json::object();
        e["height"] = P.height();
        e["rank"] = rk;
        ranks.push_back(std::move(e));
    }
    T.require("selected set generates the ideal",
              same_ideal(Ideal(data.ring, gg.all), data.algebra->ideal(), &bud));
    json out = json::object();
    out["max_height"] = gg.max_height;
    out["selected"] = poly_list(gg.selected);
    out["all"] = poly_list(gg.all);
    out["ranks"] = std::move(ranks);
    return out;
}

json run_check_hs(const ProblemSpec& spec, const ProblemData& data) {
    HSDerivation D = table_from_spec(spec, data);
    ValidationReport rep = validate(D);
    json out = json::object();
    out["valid"] = rep.ok;
    out["length"] = D.length();
    if (!rep.ok) {
        out["failing_generator"] = rep.failing_generator;
        out["failing_generator_string"] =
            data.algebra->ideal().generators()[rep.failing_generator].str();
        out["failing_order"] = rep.failing_order;
        out["residue"] = rep.residue.str();
    }
    return out;
}

json run_derivations(const ProblemData& data, Budget& bud) {
    ArtinianModel M = artinian_model(data.algebra);
    std::vector<std::vector<Polynomial>> basis = derivation_basis(M, &bud);
    json out = json::object();
    out["dimension"] = basis.size();
    out["staircase_dimension"] = M.dimension;
    out["local"] = M.local;
    json bs = json::array();
    for (const auto& eta : basis) bs.push_back(vector_by_variable(data.ring, eta));
    out["basis"] = std::move(bs);
    return out;
}

}  // namespace

ProblemSpec parse_problem_text(const std::string& json_text) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw input_error(std::string("problem JSON is malformed: ") + e.what());
    }
    return spec_from_json(j);
}

ProblemSpec parse_problem_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open problem file: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_problem_text(ss.str());
}

RunResult dispatch(const std::string& verb, const ProblemSpec& spec, const Flags& flags) {
    json report = json::object();
    report["verb"] = verb;

    json inputs = json::object();
    inputs["characteristic"] = spec.characteristic;
    inputs["variables"] = spec.variables;
    inputs["ideal"] = spec.ideal;
    inputs["order"] = flags.order.value_or(spec.order);
    json fl = json::object();
    fl["max_order"] = flags.max_order;
    fl["method"] = flags.method;
    fl["mode"] = flags.mode;
    if (flags.degree_bound) fl["degree_bound"] = *flags.degree_bound;
    if (flags.ell) fl["ell"] = *flags.ell;
    inputs["flags"] = std::move(fl);
    report["inputs"] = std::move(inputs);

    int code = 0;
    Transcript extra;
    try {
        Budget bud;
        ProblemData data = materialize(spec, flags, &bud);
        if (!data.witnesses.empty()) report["assumes_primality_of_witnesses"] = true;

        json results;
        if (verb == "integrate") {
            results = run_integrate(spec, data, flags, bud);
            report["verification"] = results["transcript"];
            results.erase("transcript");
        } else if (verb == "leaps") {
            results = run_leaps(spec, data, flags, bud);
            if (!results["complete"].get<bool>()) code = 3;
        } else if (verb == "fitting") {
            results = run_fitting(data, flags, bud);
        } else if (verb == "genericgens") {
            results = run_genericgens(data, bud, extra);
            report["verification"] = transcript_json(extra);
        } else if (verb == "check-hs") {
            results = run_check_hs(spec, data);
            if (!results["valid"].get<bool>()) code = 2;
        } else if (verb == "derivations") {
            results = run_derivations(data, bud);
        } else {
            throw input_error("unknown verb: " + verb);
        }
        report["results"] = std::move(results);
        report["status"] = code == 0  ? "ok"
                           : code == 2 ? "verification-failure"
                                       : "budget-exhausted";
    } catch (const input_error& e) {
        report["status"] = "input-error";
        report["error"] = e.what();
        code = 4;
    } catch (const budget_error& e) {
        report["status"] = "budget-exhausted";
        report["error"] = e.what();
        code = 3;
    } catch (const verification_error& e) {
        report["status"] = "verification-failure";
        report["error"] = e.what();
        if (!extra.checks.empty()) report["verification"] = transcript_json(extra);
        code = 2;
    }

    RunResult out;
    out.exit_code = code;
    out.output = flags.text ? render_text(report) : report.dump(2) + "\n";
    return out;
}

}  // namespace hs
