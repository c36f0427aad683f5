#include "cfkit/driver.hpp"

#include <fstream>
#include <sstream>

namespace cfkit {

void validate_source(const CoeffSource& src) {
    if (src.a_rule.has_value() != src.b_rule.has_value()) {
        throw ConfigError("expression rules require both --a and --b");
    }
    int sources = 0;
    if (src.preset) ++sources;
    if (src.a_rule) ++sources;
    if (src.coeff_file) ++sources;
    if (sources != 1) {
        throw ConfigError(
            "exactly one coefficient source must be given: --preset, --a/--b, or --coeff-file");
    }
    if (src.coeff_file && !src.params.empty()) {
        throw ConfigError("--param does not apply to --coeff-file input");
    }
}

std::vector<std::pair<std::string, std::string>> load_coeff_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open coefficient file '" + path + "'");
    std::vector<std::pair<std::string, std::string>> out;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream fields(line);
        std::string a_text, b_text, extra;
        if (!(fields >> a_text)) {
            // A blank line is only tolerable as the trailing newline artifact.
            std::string rest;
            if (std::getline(in, rest)) {
                throw ConfigError(path + " line " + std::to_string(line_no) +
                                  ": blank line inside coefficient list");
            }
            break;
        }
        if (!(fields >> b_text)) {
            throw ConfigError(path + " line " + std::to_string(line_no) +
                              ": expected two values 'a_m b_m'");
        }
        if (fields >> extra) {
            throw ConfigError(path + " line " + std::to_string(line_no) +
                              ": unexpected third field '" + extra + "'");
        }
        out.emplace_back(std::move(a_text), std::move(b_text));
    }
    if (out.empty()) throw ConfigError("coefficient file '" + path + "' is empty");
    return out;
}

}  // namespace cfkit
