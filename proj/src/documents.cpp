#include "treelie/documents.hpp"

#include <json.hpp>

namespace treelie {

using nlohmann::json;

namespace {

std::string idx(const std::string& field, std::size_t i)
{
	return field + "[" + std::to_string(i) + "]";
}

std::string join(const std::string& parent, const std::string& key)
{
	return parent.empty() ? key : parent + "." + key;
}

json parse_text(std::string_view text)
{
	try
	{
		return json::parse(text);
	}
	catch (const json::parse_error& e)
	{
		throw DocumentError("document", std::string("not valid JSON (") + e.what() + ")");
	}
}

const json& member(const json& obj, const std::string& parent, const std::string& key)
{
	if (!obj.is_object())
		throw DocumentError(parent.empty() ? "document" : parent, "expected an object");
	auto it = obj.find(key);
	if (it == obj.end())
		throw DocumentError(join(parent, key), "missing");
	return *it;
}

int read_int(const json& obj, const std::string& parent, const std::string& key, int lo, int hi)
{
	const json& v = member(obj, parent, key);
	if (!v.is_number_integer())
		throw DocumentError(join(parent, key), "expected an integer");
	const auto n = v.get<long long>();
	if (n < lo || n > hi)
		throw DocumentError(join(parent, key), "must lie in [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
	return static_cast<int>(n);
}

void check_kind(const json& doc, const char* kind)
{
	const json& v = member(doc, "", "kind");
	if (!v.is_string() || v.get<std::string>() != kind)
		throw DocumentError("kind", std::string("expected \"") + kind + "\"");
}

Rational read_coeff(const json& term, const std::string& field)
{
	const json& v = member(term, field, "coeff");
	if (!v.is_string())
		throw DocumentError(field + ".coeff", "expected a string \"p/q\"");
	try
	{
		return parse_rational(v.get<std::string>());
	}
	catch (const std::invalid_argument& e)
	{
		throw DocumentError(field + ".coeff", e.what());
	}
}

Word read_word(const json& term, const std::string& field, int genus)
{
	const json& v = member(term, field, "word");
	if (!v.is_array())
		throw DocumentError(field + ".word", "expected a list of generator names");
	Word w;
	for (std::size_t i = 0; i < v.size(); ++i)
	{
		if (!v[i].is_string())
			throw DocumentError(idx(field + ".word", i), "expected a generator name");
		try
		{
			w.push_back(letter_of(parse_gen_name(v[i].get<std::string>(), genus)));
		}
		catch (const std::invalid_argument& e)
		{
			throw DocumentError(idx(field + ".word", i), e.what());
		}
	}
	return w;
}

json word_json(const Word& w)
{
	json out = json::array();
	for (Letter l : w)
		out.push_back(to_string(gen_name(l)));
	return out;
}

json lie_terms(const LieSeries& x)
{
	json terms = json::array();
	auto t = x.table();
	for (const auto& [id, c] : x.coords())
		terms.push_back({{"coeff", to_string(c)}, {"word", word_json(t->word(id))}});
	return terms;
}

LieSeries lie_from_terms(const json& terms, const std::string& field, int genus, int max_degree)
{
	if (!terms.is_array())
		throw DocumentError(field, "expected a list of terms");
	LieSeries x(genus, max_degree);
	auto t = x.table();
	for (std::size_t i = 0; i < terms.size(); ++i)
	{
		const std::string f = idx(field, i);
		const Rational c = read_coeff(terms[i], f);
		const Word w = read_word(terms[i], f, genus);
		if (w.empty() || static_cast<int>(w.size()) > max_degree)
			throw DocumentError(f + ".word", "length must lie in [1, max_degree]");
		auto id = t->find(w);
		if (!id)
			throw DocumentError(f + ".word", "not a Lyndon word");
		x.add_term(*id, c);
	}
	return x;
}

std::pair<int, int> read_context(const json& doc)
{
	const int genus = read_int(doc, "", "genus", 1, 8);
	const int n = read_int(doc, "", "max_degree", 1, 14);
	return {genus, n};
}

const json& images_of(const json& doc, int genus)
{
	const json& images = member(doc, "", "images");
	if (!images.is_object())
		throw DocumentError("images", "expected an object keyed by generator name");
	for (const auto& [key, v] : images.items())
	{
		try
		{
			parse_gen_name(key, genus);
		}
		catch (const std::invalid_argument&)
		{
			throw DocumentError("images." + key, "not a generator of genus " + std::to_string(genus));
		}
	}
	return images;
}

} // namespace

std::string write_lie(const LieSeries& x)
{
	json doc{{"kind", "lie"}, {"genus", x.genus()}, {"max_degree", x.max_degree()}, {"terms", lie_terms(x)}};
	return doc.dump(2) + "\n";
}

LieSeries read_lie(std::string_view text)
{
	const json doc = parse_text(text);
	check_kind(doc, "lie");
	auto [genus, n] = read_context(doc);
	return lie_from_terms(member(doc, "", "terms"), "terms", genus, n);
}

std::string write_expansion(const ExpansionMap& theta)
{
	json images = json::object();
	for (std::size_t l = 0; l < theta.images.size(); ++l)
	{
		json terms = json::array();
		for (const auto& [w, c] : theta.images[l].terms())
			terms.push_back({{"coeff", to_string(c)}, {"word", word_json(w)}});
		images[to_string(gen_name(static_cast<Letter>(l)))] = std::move(terms);
	}
	json doc{{"kind", "expansion"},
	         {"genus", theta.genus},
	         {"max_degree", theta.max_degree},
	         {"images", std::move(images)}};
	return doc.dump(2) + "\n";
}

ExpansionMap read_expansion(std::string_view text)
{
	const json doc = parse_text(text);
	check_kind(doc, "expansion");
	auto [genus, n] = read_context(doc);
	const json& images = images_of(doc, genus);
	ExpansionMap theta{genus, n, {}};
	for (int l = 0; l < 2 * genus; ++l)
	{
		const std::string name = to_string(gen_name(static_cast<Letter>(l)));
		const std::string field = "images." + name;
		const json& terms = member(images, "images", name);
		if (!terms.is_array())
			throw DocumentError(field, "expected a list of terms");
		TensorSeries x(genus, n);
		for (std::size_t i = 0; i < terms.size(); ++i)
		{
			const std::string f = idx(field, i);
			const Rational c = read_coeff(terms[i], f);
			const Word w = read_word(terms[i], f, genus);
			if (static_cast<int>(w.size()) > n)
				throw DocumentError(f + ".word", "longer than max_degree");
			x.add(w, c);
		}
		theta.images.push_back(std::move(x));
	}
	return theta;
}

std::string write_automorphism(const LieAutomorphism& psi)
{
	json images = json::object();
	for (std::size_t l = 0; l < psi.images().size(); ++l)
		images[to_string(gen_name(static_cast<Letter>(l)))] = lie_terms(psi.images()[l]);
	json doc{{"kind", "automorphism"},
	         {"genus", psi.genus()},
	         {"max_degree", psi.max_degree()},
	         {"images", std::move(images)}};
	return doc.dump(2) + "\n";
}

LieAutomorphism read_automorphism(std::string_view text)
{
	const json doc = parse_text(text);
	check_kind(doc, "automorphism");
	auto [genus, n] = read_context(doc);
	const json& images = images_of(doc, genus);
	std::vector<LieSeries> values;
	for (int l = 0; l < 2 * genus; ++l)
	{
		const std::string name = to_string(gen_name(static_cast<Letter>(l)));
		values.push_back(lie_from_terms(member(images, "images", name), "images." + name, genus, n));
		if (values.back().degree_part(1) != LieSeries::generator(genus, n, static_cast<Letter>(l)))
			throw DocumentError("images." + name, "degree 1 part must be the generator itself");
	}
	return LieAutomorphism::from_images(genus, n, std::move(values));
}

std::string write_trees(const TreeCombo& c)
{
	json trees = json::array();
	for (const auto& [key, coef] : c.terms())
		trees.push_back({{"coeff", to_string(coef)}, {"tree", key}});
	json doc{{"kind", "trees"}, {"genus", c.genus()}, {"trees", std::move(trees)}};
	return doc.dump(2) + "\n";
}

TreeCombo read_trees(std::string_view text)
{
	const json doc = parse_text(text);
	check_kind(doc, "trees");
	const int genus = read_int(doc, "", "genus", 1, 8);
	const json& trees = member(doc, "", "trees");
	if (!trees.is_array())
		throw DocumentError("trees", "expected a list of trees");
	TreeCombo c(genus);
	for (std::size_t i = 0; i < trees.size(); ++i)
	{
		const std::string f = idx("trees", i);
		const Rational coef = read_coeff(trees[i], f);
		const json& t = member(trees[i], f, "tree");
		if (!t.is_string())
			throw DocumentError(f + ".tree", "expected a parenthesized tree");
		try
		{
			c.add(TreeDiagram::parse(t.get<std::string>(), genus), coef);
		}
		catch (const std::invalid_argument& e)
		{
			throw DocumentError(f + ".tree", e.what());
		}
	}
	return c;
}

std::string write_hl_tensor(const HLieTensor& x)
{
	json terms = json::array();
	auto t = LyndonTable::get(x.genus(), 1);
	for (const auto& [key, c] : x.terms())
		terms.push_back({{"coeff", to_string(c)},
		                 {"h", to_string(gen_name(key.first))},
		                 {"word", word_json(t->word(key.second))},
		                 {"bracket", t->bracketing(key.second)}});
	json doc{{"kind", "hl_tensor"}, {"genus", x.genus()}, {"terms", std::move(terms)}};
	return doc.dump(2) + "\n";
}

std::string write_class(const HomologyClass& h)
{
	json coords = json::object();
	for (const auto& [d, v] : h.coords)
	{
		json row = json::array();
		for (const auto& c : v)
			row.push_back(to_string(c));
		coords[std::to_string(d)] = std::move(row);
	}
	json doc{{"kind", "h3_class"}, {"genus", h.genus}, {"class", h.k}, {"coords", std::move(coords)}};
	return doc.dump(2) + "\n";
}

} // namespace treelie
