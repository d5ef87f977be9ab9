#include "sl3ext/json_io.hpp"

#include <sstream>

namespace sl3ext {

namespace {

Int int_from_json(const json& j) {
    if (j.is_number_integer()) return Int(j.get<long>());
    if (j.is_string()) return Int(j.get<std::string>());
    throw error("expected an integer or a decimal string");
}

json int_to_json(const Int& v) {
    if (v.fits_slong_p()) return json(v.get_si());
    return json(v.get_str());
}

}  // namespace

json ring_to_json(const RingPtr& R) {
    switch (R->kind()) {
        case RingKind::Integers:
            return json{{"kind", "Z"}};
        case RingKind::IntegersModN:
            return json{{"kind", "Zmod"}, {"n", int_to_json(R->mod_n())}};
        case RingKind::LocalizedIntegers:
            return json{{"kind", "Zloc"}, {"m", int_to_json(R->loc_m())}};
        case RingKind::QuadraticOrder:
            return json{{"kind", "Zquad"}, {"q", int_to_json(R->quad_q())}};
        case RingKind::QuotientRing:
            return json{{"kind", "Quot"},
                        {"base", ring_to_json(R->quot_base())},
                        {"modulus", elem_to_json(R->quot_base(), R->quot_modulus())}};
    }
    throw internal_error("bad kind");
}

RingPtr ring_from_json(const json& j) {
    if (!j.is_object() || !j.contains("kind")) throw error("ring descriptor must have a kind");
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "Z") return make_ring_integers();
    if (kind == "Zmod") return make_ring_mod(int_from_json(j.at("n")));
    if (kind == "Zloc") return make_ring_localized(int_from_json(j.at("m")));
    if (kind == "Zquad") return make_ring_quadratic(int_from_json(j.at("q")));
    if (kind == "Quot") {
        RingPtr base = ring_from_json(j.at("base"));
        Elem mod = elem_from_json(base, j.at("modulus"));
        return make_ring_quotient(base, mod);
    }
    throw error("unknown ring kind: " + kind);
}

json elem_to_json(const RingPtr& R, const Elem& x) {
    switch (R->kind()) {
        case RingKind::Integers:
        case RingKind::IntegersModN:
            return json(x.u.get_str());
        case RingKind::LocalizedIntegers:
            return json::array({x.u.get_str(), x.v.get_str()});
        case RingKind::QuadraticOrder:
        case RingKind::QuotientRing:
            return json::array({x.u.get_str(), x.v.get_str()});
    }
    throw internal_error("bad kind");
}

Elem elem_from_json(const RingPtr& R, const json& j) {
    switch (R->kind()) {
        case RingKind::Integers:
        case RingKind::IntegersModN:
            return R->make(int_from_json(j), Int(0));
        case RingKind::LocalizedIntegers:
        case RingKind::QuadraticOrder:
        case RingKind::QuotientRing: {
            if (!j.is_array() || j.size() != 2) throw error("expected a two-component element");
            return R->make(int_from_json(j[0]), int_from_json(j[1]));
        }
    }
    throw internal_error("bad kind");
}

json mat2_to_json(const Mat2& A) {
    return json{{"ring", ring_to_json(A.R)},
                {"rows", json::array({json::array({elem_to_json(A.R, A.a), elem_to_json(A.R, A.b)}),
                                      json::array({elem_to_json(A.R, A.c), elem_to_json(A.R, A.d)})})}};
}

Mat2 mat2_from_json(const json& j) {
    RingPtr R = ring_from_json(j.at("ring"));
    const json& rows = j.at("rows");
    if (!rows.is_array() || rows.size() != 2 || rows[0].size() != 2 || rows[1].size() != 2)
        throw error("2x2 matrix needs a 2x2 rows array");
    return make_mat2(R, elem_from_json(R, rows[0][0]), elem_from_json(R, rows[0][1]),
                     elem_from_json(R, rows[1][0]), elem_from_json(R, rows[1][1]));
}

json mat3_to_json(const Mat3& A) {
    json rows = json::array();
    for (int i = 0; i < 3; ++i) {
        json row = json::array();
        for (int c = 0; c < 3; ++c) row.push_back(elem_to_json(A.R, A.at(i, c)));
        rows.push_back(row);
    }
    return json{{"ring", ring_to_json(A.R)}, {"rows", rows}};
}

Mat3 mat3_from_json(const json& j) {
    RingPtr R = ring_from_json(j.at("ring"));
    const json& rows = j.at("rows");
    if (!rows.is_array() || rows.size() != 3) throw error("3x3 matrix needs a 3x3 rows array");
    std::array<Elem, 9> entries;
    for (int i = 0; i < 3; ++i) {
        if (rows[size_t(i)].size() != 3) throw error("3x3 matrix needs a 3x3 rows array");
        for (int c = 0; c < 3; ++c)
            entries[size_t(3 * i + c)] = elem_from_json(R, rows[size_t(i)][size_t(c)]);
    }
    return make_mat3(R, entries);
}

json certificate_to_json(const RingPtr& R, const Certificate& c) {
    return json{{"e", elem_to_json(R, c.e)},
                {"f", elem_to_json(R, c.f)},
                {"s", elem_to_json(R, c.s)},
                {"t", elem_to_json(R, c.t)}};
}

json witness_to_json(const RingPtr& R, const FullnessWitness& w) {
    if (w.factorization) {
        const auto& nf = *w.factorization;
        return json{{"mode", "factorization"},
                    {"column", json::array({elem_to_json(R, nf.l), elem_to_json(R, nf.m)})},
                    {"row", json::array({elem_to_json(R, nf.o), elem_to_json(R, nf.q)})}};
    }
    const auto& pf = *w.proof;
    json divisors = json::array();
    for (const Elem& d : pf.divisors) divisors.push_back(elem_to_json(R, d));
    json excluded = json::array();
    for (const auto& rej : pf.rejected)
        excluded.push_back(json{{"divisor", elem_to_json(R, rej.divisor)},
                                {"cofactor", elem_to_json(R, rej.cofactor)},
                                {"reason", rej.reason}});
    return json{{"mode", "full-proof"},
                {"pivot", elem_to_json(R, pf.pivot)},
                {"divisors", divisors},
                {"excluded", excluded}};
}

json outcome_to_json(const Mat2& A, const ExtensionOutcome& out) {
    json j;
    switch (out.status) {
        case OutcomeStatus::Simple:
            j["status"] = "simple";
            break;
        case OutcomeStatus::ExtendableOnly:
            j["status"] = "extendable";
            break;
        case OutcomeStatus::NotExtendable:
            j["status"] = "not_extendable";
            break;
        case OutcomeStatus::Undecided:
            j["status"] = "undecided";
            break;
    }
    if (out.extension) j["extension"] = mat3_to_json(*out.extension);
    if (out.certificate) j["certificate"] = certificate_to_json(A.R, *out.certificate);
    if (out.witness) j["witness"] = witness_to_json(A.R, *out.witness);
    if (out.bound) j["bound"] = *out.bound;
    return j;
}

json nu_sample_to_json(const NuSample& ns) {
    json gamma = json::array();
    for (const Certificate& c : ns.gamma)
        gamma.push_back(json::array({c.e.u.get_si(), c.f.u.get_si(), c.s.u.get_si(), c.t.u.get_si()}));
    json values = json::array();
    for (const Int& v : ns.values) values.push_back(int_to_json(v));
    return json{{"matrix", mat2_to_json(ns.matrix)},
                {"bound", ns.bound},
                {"gamma", gamma},
                {"values", values}};
}

std::string nu_sample_to_csv(const NuSample& ns) {
    std::ostringstream os;
    os << "e,f,s,t,nu\n";
    Int det = det2(ns.matrix).u;
    for (const Certificate& c : ns.gamma) {
        Int nu = det + c.e.u * c.s.u + c.f.u * c.t.u;
        os << c.e.u.get_str() << "," << c.f.u.get_str() << "," << c.s.u.get_str() << ","
           << c.t.u.get_str() << "," << nu.get_str() << "\n";
    }
    return os.str();
}

json report_to_json(const RingClassReport& rep) {
    json j{{"ring", ring_to_json(rep.ring)}, {"sr1", rep.sr1},   {"fsr15", rep.fsr15},
           {"asr1", rep.asr1},               {"pi2", rep.pi2},   {"e2", rep.e2},
           {"se2", rep.se2}};
    if (rep.counterexample) {
        json witness = json::array();
        for (const Elem& e : rep.counterexample->second)
            witness.push_back(elem_to_json(rep.ring, e));
        j["counterexample"] = json{{"predicate", rep.counterexample->first}, {"witness", witness}};
    } else {
        j["counterexample"] = nullptr;
    }
    return j;
}

std::string reports_to_csv(const std::vector<RingClassReport>& reps) {
    std::ostringstream os;
    os << "n,sr1,fsr15,asr1,pi2,e2,se2\n";
    for (const auto& rep : reps) {
        os << rep.ring->mod_n().get_str() << "," << rep.sr1 << "," << rep.fsr15 << ","
           << rep.asr1 << "," << rep.pi2 << "," << rep.e2 << "," << rep.se2 << "\n";
    }
    return os.str();
}

}  // namespace sl3ext
