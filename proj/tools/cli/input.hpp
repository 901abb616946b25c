#ifndef DEQUANT_CLI_INPUT_HPP
#define DEQUANT_CLI_INPUT_HPP

#include "dequant/induce.hpp"
#include "dequant/verma.hpp"

#include <map>
#include <optional>
#include <string>

namespace dequant::cli {

// What a command works on: a catalog entry or an algebra file.
struct Source {
    std::string label;
    LieAlgebra algebra;
    std::optional<LinearForm> form;
    std::optional<Subspace> polarization;
    std::optional<MalcevChart> chart;
    std::optional<CatalogSpec> catalog;      // operators come from the catalog
    std::optional<ChevalleyData> chevalley;  // verma-sl2 or a file "chevalley" block
    RVec weight;                             // highest weight for Verma sources
};

// "p/q", "-3", "2".
Rational parse_number(const std::string& text);
// "name=p/q"
std::pair<std::string, Rational> parse_binding(const std::string& text);

Source load_example(const std::string& name, const std::map<std::string, Rational>& params, const std::string& model,
                    int trunc);
Source load_file(const std::string& path, const std::map<std::string, Rational>& params);

// The representation of a source: the catalog operators, or build_pi from
// the form and polarization of a nilpotent algebra.
AnyRep representation(const Source& s);

}  // namespace dequant::cli

#endif
