#pragma once

// JSON documents exchanged by the command line tool. Coefficients are exact
// strings "p/q"; words are lists of generator names.
//
//   lie:          {"kind":"lie","genus":g,"max_degree":n,
//                  "terms":[{"coeff":"1/2","word":["a1","b1"]}, ...]}
//   expansion:    {"kind":"expansion","genus":g,"max_degree":n,
//                  "images":{"a1":[{"coeff":"1","word":[]}, ...], ...}}
//   automorphism: {"kind":"automorphism","genus":g,"max_degree":n,
//                  "images":{"a1":<lie term list>, ...}}
//   trees:        {"kind":"trees","genus":g,
//                  "trees":[{"coeff":"-1","tree":"(a1 b1 (a2 b2))"}, ...]}
//
// Lie words are Lyndon words; the bracketing is the standard one.

#include "treelie/automorphism.hpp"
#include "treelie/hl_tensor.hpp"
#include "treelie/jacobi.hpp"
#include "treelie/koszul.hpp"
#include "treelie/tensor.hpp"

#include <stdexcept>
#include <string>
#include <string_view>

namespace treelie {

/// Malformed document; field() names the offending entry, e.g.
/// "images.b2[3].coeff".
class DocumentError : public std::runtime_error
{
public:
	DocumentError(std::string field, const std::string& what)
	    : std::runtime_error(field + ": " + what), field_(std::move(field))
	{
	}
	const std::string& field() const { return field_; }

private:
	std::string field_;
};

std::string write_lie(const LieSeries& x);
LieSeries read_lie(std::string_view text);

std::string write_expansion(const ExpansionMap& theta);
ExpansionMap read_expansion(std::string_view text);

std::string write_automorphism(const LieAutomorphism& psi);
LieAutomorphism read_automorphism(std::string_view text);

std::string write_trees(const TreeCombo& c);
TreeCombo read_trees(std::string_view text);

/// Output-only documents.
std::string write_hl_tensor(const HLieTensor& x);
std::string write_class(const HomologyClass& h);

} // namespace treelie
