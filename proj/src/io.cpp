#include "charp/io.hpp"

#include <fstream>
#include <sstream>

#include "charp/parse.hpp"
#include "json.hpp"

namespace charp {

using ordered_json = nlohmann::ordered_json;

namespace {

constexpr const char* kSchema = "charp/1";

std::string strip(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    out.push_back(cur);
    return out;
}

ordered_json poly_array(const std::vector<Polynomial>& polys) {
    ordered_json arr = ordered_json::array();
    for (const auto& f : polys) arr.push_back(f.str());
    return arr;
}

} // namespace

std::string read_text_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw engine_error("cannot open file: " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

ParsedInput parse_input_text(const std::string& text, Budget budget) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;

    std::uint32_t p = 0;
    std::vector<std::string> vars;
    MonomialOrder::Kind kind = MonomialOrder::Kind::GrevLex;
    bool have_char = false, have_vars = false;
    std::vector<Polynomial> ideal_gens;
    std::vector<std::int64_t> twists;
    int mrows = -1, mcols = -1;
    std::vector<std::vector<std::string>> matrix_rows;
    enum class Section { Header, Ideal, Module } section = Section::Header;
    RingPtr ring;

    auto fail = [&](const std::string& msg) -> void {
        throw engine_error("line " + std::to_string(lineno) + ": " + msg);
    };
    auto ensure_ring = [&]() {
        if (ring) return;
        if (!have_char || !have_vars) fail("char and vars must precede the ideal section");
        ring = make_ring(p, vars, kind);
    };

    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = strip(line);
        if (line.empty()) continue;

        if (line == "ideal:") {
            ensure_ring();
            section = Section::Ideal;
            continue;
        }
        if (line == "module:") {
            ensure_ring();
            section = Section::Module;
            continue;
        }
        switch (section) {
            case Section::Header: {
                std::istringstream ls(line);
                std::string key;
                ls >> key;
                if (key == "char") {
                    long v = 0;
                    if (!(ls >> v) || v < 2) fail("char needs a prime value");
                    p = static_cast<std::uint32_t>(v);
                    have_char = true;
                } else if (key == "vars") {
                    std::string rest;
                    std::getline(ls, rest);
                    for (auto& name : split(rest, ',')) {
                        std::string n = strip(name);
                        if (!n.empty()) vars.push_back(n);
                    }
                    if (vars.empty()) fail("vars needs at least one name");
                    have_vars = true;
                } else if (key == "order") {
                    std::string o;
                    ls >> o;
                    if (o == "lex") kind = MonomialOrder::Kind::Lex;
                    else if (o == "grlex") kind = MonomialOrder::Kind::GrLex;
                    else if (o == "grevlex") kind = MonomialOrder::Kind::GrevLex;
                    else fail("unknown order '" + o + "'");
                } else {
                    fail("unknown header directive '" + key + "'");
                }
                break;
            }
            case Section::Ideal: {
                try {
                    ideal_gens.push_back(parse_polynomial(ring, line));
                } catch (const engine_error& e) {
                    fail(e.what());
                }
                break;
            }
            case Section::Module: {
                std::istringstream ls(line);
                std::string key;
                ls >> key;
                if (key == "twists") {
                    std::int64_t t;
                    while (ls >> t) twists.push_back(t);
                } else if (key == "matrix") {
                    if (!(ls >> mrows >> mcols) || mrows < 0 || mcols < 0)
                        fail("matrix needs row and column counts");
                } else {
                    if (mrows < 0) fail("matrix dimensions must precede matrix rows");
                    auto cells = split(line, ',');
                    if (static_cast<int>(cells.size()) != mcols)
                        fail("expected " + std::to_string(mcols) + " entries in the matrix row");
                    std::vector<std::string> row;
                    for (auto& cell : cells) row.push_back(strip(cell));
                    matrix_rows.push_back(std::move(row));
                }
                break;
            }
        }
    }
    ensure_ring();

    ParsedInput out;
    out.ring = QuotientRing::make(ring, ideal_gens, budget);
    if (section == Section::Module || !twists.empty() || mrows >= 0) {
        if (mrows < 0) throw engine_error("module section is missing its matrix");
        if (static_cast<int>(matrix_rows.size()) != mrows)
            throw engine_error("matrix row count mismatch");
        if (twists.empty()) twists.assign(mrows, 0);
        if (static_cast<int>(twists.size()) != mrows)
            throw engine_error("twists length must equal the matrix row count");
        ModuleOrder ord{ring, mrows};
        std::vector<ModVec> cols;
        for (int c = 0; c < mcols; ++c) {
            ModVec col;
            for (int r = 0; r < mrows; ++r) {
                const std::string& cell = matrix_rows[r][c];
                if (cell == "0" || cell.empty()) continue;
                col = col.add(ModVec::from_poly(parse_polynomial(ring, cell), r), ord);
            }
            cols.push_back(col);
        }
        out.module = PresentedModule(out.ring, GradedFreeModule::of(twists), cols, budget);
        out.has_module = true;
    }
    return out;
}

ParsedInput parse_input_file(const std::string& path, Budget budget) {
    return parse_input_text(read_text_file(path), budget);
}

PresentedModule module_of(const ParsedInput& in, Budget budget) {
    if (in.has_module) return in.module;
    return PresentedModule::free_module(in.ring, GradedFreeModule::of({0}), budget);
}

std::string json_basis(const GroebnerIdeal& ideal) {
    ordered_json j;
    j["schema"] = kSchema;
    j["command"] = "gb";
    j["zero_ideal"] = ideal.is_zero_ideal();
    j["unit_ideal"] = ideal.is_unit_ideal();
    j["basis"] = poly_array(ideal.reduced_basis());
    return j.dump();
}

std::string json_polynomial_list(const std::string& key, const std::vector<Polynomial>& polys) {
    ordered_json j;
    j["schema"] = kSchema;
    j[key] = poly_array(polys);
    return j.dump();
}

std::string json_betti(const BettiTable& betti, bool complete, int pd) {
    ordered_json j;
    j["schema"] = kSchema;
    j["command"] = "betti";
    ordered_json entries = ordered_json::object();
    for (const auto& [key, value] : betti.entries)
        entries[std::to_string(key.first) + "," + std::to_string(key.second)] = value;
    j["entries"] = entries;
    j["complete"] = complete;
    if (complete) j["pd"] = pd;
    return j.dump();
}

std::string json_resolution(const Resolution& res) {
    ordered_json j;
    j["schema"] = kSchema;
    j["command"] = "resolve";
    ordered_json ranks = ordered_json::array();
    ordered_json twists = ordered_json::array();
    for (int i = 0; i <= res.complex.steps(); ++i) {
        const GradedFreeModule& f = res.complex.term(i);
        ranks.push_back(f.rank);
        ordered_json tw = ordered_json::array();
        for (auto t : f.twists) tw.push_back(t);
        twists.push_back(tw);
    }
    j["ranks"] = ranks;
    j["twists"] = twists;
    j["complete"] = res.complete;
    if (res.complete) j["pd"] = res.pd;
    return j.dump();
}

std::string json_length(const ModuleLength& len) {
    ordered_json j;
    j["schema"] = kSchema;
    j["command"] = "length";
    if (len.finite) j["length"] = len.value;
    else j["length"] = "INFINITE";
    return j.dump();
}

std::string json_scalar(const std::string& key, std::int64_t value) {
    ordered_json j;
    j["schema"] = kSchema;
    j[key] = value;
    return j.dump();
}

std::string json_presentation(const std::string& command, const PresentedModule& m, int n,
                              std::uint64_t q) {
    ordered_json j;
    j["schema"] = kSchema;
    j["command"] = command;
    j["n"] = n;
    j["q"] = q;
    j["rank"] = m.rank();
    ordered_json tw = ordered_json::array();
    for (auto t : m.gens().twists) tw.push_back(t);
    j["twists"] = tw;
    ordered_json rows = ordered_json::array();
    for (int r = 0; r < m.rank(); ++r) {
        ordered_json row = ordered_json::array();
        for (const auto& c : m.relations())
            row.push_back(c.component(r, m.ring()->ambient()).str());
        rows.push_back(row);
    }
    j["matrix"] = rows;
    j["module_hash"] = m.presentation_hash();
    return j.dump();
}

std::string json_tor(const PresentedModule& tor, int i, int n) {
    ordered_json j;
    j["schema"] = kSchema;
    j["command"] = "tor";
    j["i"] = i;
    j["n"] = n;
    j["zero"] = tor.is_zero();
    ModuleLength len = tor.is_zero() ? ModuleLength{true, 0} : module_length(tor);
    if (len.finite) j["length"] = len.value;
    else j["length"] = "INFINITE";
    j["generators"] = tor.rank();
    return j.dump();
}

namespace {

const char* tor_state_word(TorState s) {
    switch (s) {
        case TorState::Zero: return "zero";
        case TorState::Nonzero: return "nonzero";
        default: return "indeterminate";
    }
}

} // namespace

std::string json_psh(const PshReport& rep, int n, std::uint64_t module_hash) {
    ordered_json j;
    j["schema"] = kSchema;
    j["command"] = "psh-check";
    j["n"] = n;
    j["module_hash"] = module_hash;
    j["pd_known"] = rep.pd_known;
    if (rep.pd_known) j["pd_finite"] = rep.pd_finite;
    ordered_json entries = ordered_json::array();
    for (const auto& e : rep.entries) {
        ordered_json row;
        row["i"] = e.i;
        row["state"] = tor_state_word(e.state);
        if (e.state == TorState::Nonzero && e.length.finite) row["length"] = e.length.value;
        entries.push_back(row);
    }
    j["tor"] = entries;
    j["hard_failure"] = rep.hard_failure;
    if (!rep.note.empty()) j["note"] = rep.note;
    return j.dump();
}

std::string json_rigidity(const RigidityReport& rep) {
    ordered_json j;
    j["schema"] = kSchema;
    j["command"] = "rigidity";
    j["n"] = rep.n;
    j["q"] = rep.q;
    j["module_hash"] = rep.module_hash;
    ordered_json tor = ordered_json::array();
    for (const auto& e : rep.tor_table.entries) {
        ordered_json row;
        row["i"] = e.i;
        row["state"] = tor_state_word(e.state);
        if (e.state == TorState::Nonzero && e.length.finite) row["length"] = e.length.value;
        tor.push_back(row);
    }
    j["tor"] = tor;
    j["pd_known"] = rep.tor_table.pd_known;
    if (rep.tor_table.pd_known) j["pd_finite"] = rep.tor_table.pd_finite;
    j["frobenius_depth_positive"] = rep.frobenius_depth_positive;
    if (rep.frobenius_depth >= 0) j["frobenius_depth"] = rep.frobenius_depth;
    switch (rep.strong) {
        case RigidityVerdict::NotStronglyRigid: j["strongly_rigid_witness"] = "NOT_STRONGLY_RIGID"; break;
        case RigidityVerdict::Inconclusive: j["strongly_rigid_witness"] = "INCONCLUSIVE"; break;
        default: j["strongly_rigid_witness"] = "INDETERMINATE";
    }
    if (rep.numerical_applicable) {
        ordered_json num;
        num["lhs"] = rep.numerical.lhs;
        num["rhs"] = rep.numerical.rhs;
        num["equal"] = rep.numerical.equal;
        j["numerically_rigid_instance"] = num;
    }
    ordered_json assume;
    assume["gorenstein"] = rep.gorenstein_asserted;
    assume["isolated_singularity"] = rep.isolated_singularity_asserted;
    assume["complete_intersection"] = rep.complete_intersection_asserted;
    j["assumptions"] = assume;
    j["hard_failure"] = rep.tor_table.hard_failure || rep.numerical.hard_failure;
    return j.dump();
}

std::string json_error(const std::string& reason, const std::string& message) {
    ordered_json j;
    j["schema"] = kSchema;
    j["error"] = message;
    j["reason"] = reason;
    return j.dump();
}

std::string json_strong_rigidity(const StrongRigidityReport& rep, int n) {
    ordered_json j;
    j["schema"] = kSchema;
    j["command"] = "strong-rigidity";
    j["n"] = n;
    j["module_hash"] = rep.module_hash;
    switch (rep.verdict) {
        case RigidityVerdict::NotStronglyRigid: j["verdict"] = "NOT_STRONGLY_RIGID"; break;
        case RigidityVerdict::Inconclusive: j["verdict"] = "INCONCLUSIVE"; break;
        default: j["verdict"] = "INDETERMINATE";
    }
    j["pd_infinite"] = rep.pd_infinite;
    j["frobenius_depth_positive"] = rep.frobenius_depth_positive;
    j["assumptions"] = ordered_json::object();
    j["assumptions"]["gorenstein"] = rep.gorenstein_asserted;
    j["assumptions"]["isolated_singularity"] = rep.isolated_singularity_asserted;
    if (!rep.note.empty()) j["note"] = rep.note;
    return j.dump();
}

std::string json_numerical(const NumericalRigidityReport& rep, int n, int dim) {
    ordered_json j;
    j["schema"] = kSchema;
    j["command"] = "numerical-rigidity";
    j["n"] = n;
    j["ring_dimension"] = dim;
    j["lhs"] = rep.lhs;
    j["rhs"] = rep.rhs;
    j["equal"] = rep.equal;
    if (rep.pd_checked) j["pd_finite"] = rep.pd_finite;
    j["hard_failure"] = rep.hard_failure;
    if (!rep.note.empty()) j["note"] = rep.note;
    return j.dump();
}

std::string json_euler(const EulerData& data) {
    ordered_json j;
    j["schema"] = kSchema;
    j["command"] = "chi";
    ordered_json lens = ordered_json::array();
    for (auto v : data.tor_lengths) lens.push_back(v);
    j["tor_lengths"] = lens;
    j["chi"] = data.chi;
    ordered_json chis = ordered_json::array();
    for (auto v : data.chi_i) chis.push_back(v);
    j["chi_i"] = chis;
    return j.dump();
}

std::string json_prop43(const Prop43Report& rep) {
    ordered_json j;
    j["schema"] = kSchema;
    j["command"] = "check-prop43";
    switch (rep.status) {
        case Prop43Status::Holds: j["status"] = "HOLDS"; break;
        case Prop43Status::HoldsWithEquality: j["status"] = "HOLDS_WITH_EQUALITY"; break;
        case Prop43Status::UnmetHypothesis: j["status"] = "UNMET_HYPOTHESIS"; break;
        default: j["status"] = "INDETERMINATE";
    }
    j["lhs"] = rep.lhs;
    j["rhs"] = rep.rhs;
    j["codim"] = rep.codim;
    if (rep.frobenius_cm_checked) j["frobenius_cm"] = rep.frobenius_cm;
    if (!rep.note.empty()) j["note"] = rep.note;
    return j.dump();
}

std::string check_status_word(CheckStatus s) {
    switch (s) {
        case CheckStatus::Pass: return "PASS";
        case CheckStatus::Fail: return "FAIL";
        default: return "INDETERMINATE";
    }
}

std::string json_scenario(const ScenarioReport& rep) {
    ordered_json j;
    j["schema"] = kSchema;
    j["command"] = "verify";
    j["scenario"] = rep.scenario.id;
    j["p"] = rep.scenario.p;
    j["n"] = rep.scenario.n;
    ordered_json checks = ordered_json::array();
    for (const auto& c : rep.checks) {
        ordered_json row;
        row["name"] = c.name;
        row["status"] = check_status_word(c.status);
        if (!c.expected.empty()) row["expected"] = c.expected;
        if (!c.actual.empty()) row["actual"] = c.actual;
        if (!c.origin.empty()) row["origin"] = c.origin;
        if (c.flagged) row["flagged"] = true;
        if (!c.note.empty()) row["note"] = c.note;
        checks.push_back(row);
    }
    j["checks"] = checks;
    j["overall"] = check_status_word(rep.overall());
    return j.dump();
}

} // namespace charp
