#ifndef CHARP_IO_HPP
#define CHARP_IO_HPP

#include <string>

#include "charp/koszul.hpp"
#include "charp/scenario.hpp"

namespace charp {

// Parsed contents of a ring/module file (grammar in FORMATS.md).
struct ParsedInput {
    QRingPtr ring;
    bool has_module = false;
    PresentedModule module; // valid when has_module
};

ParsedInput parse_input_text(const std::string& text, Budget budget = {});
ParsedInput parse_input_file(const std::string& path, Budget budget = {});

// the module described by the input: the named module, or R itself
PresentedModule module_of(const ParsedInput& in, Budget budget = {});

std::string read_text_file(const std::string& path);

// JSON emission (stable key order, schema-tagged) ----------------------------

std::string json_basis(const GroebnerIdeal& ideal);
std::string json_polynomial_list(const std::string& key, const std::vector<Polynomial>& polys);
std::string json_betti(const BettiTable& betti, bool complete, int pd);
std::string json_resolution(const Resolution& res);
std::string json_length(const ModuleLength& len);
std::string json_scalar(const std::string& key, std::int64_t value);
// presentation as a row-major matrix of polynomial strings plus twists
std::string json_presentation(const std::string& command, const PresentedModule& m,
                              int n, std::uint64_t q);
std::string json_tor(const PresentedModule& tor, int i, int n);
std::string json_psh(const PshReport& rep, int n, std::uint64_t module_hash);
std::string json_rigidity(const RigidityReport& rep);
std::string json_strong_rigidity(const StrongRigidityReport& rep, int n);
// machine-readable failure record for the CLI (reason: "budget" or "input")
std::string json_error(const std::string& reason, const std::string& message);
std::string json_numerical(const NumericalRigidityReport& rep, int n, int dim);
std::string json_euler(const EulerData& data);
std::string json_prop43(const Prop43Report& rep);
std::string json_scenario(const ScenarioReport& rep);

std::string check_status_word(CheckStatus s);

} // namespace charp

#endif
