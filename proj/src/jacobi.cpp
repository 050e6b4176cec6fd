#include "treelie/jacobi.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <set>
#include <sstream>
#include <stdexcept>

namespace treelie {

namespace {

struct Node
{
	std::string name;
	std::vector<Node> kids;
	bool is_leaf() const { return kids.empty(); }
};

class Parser
{
public:
	explicit Parser(std::string_view text) : text_(text) {}

	Node parse_all()
	{
		Node n = parse_node();
		skip();
		if (pos_ != text_.size())
			fail("trailing characters");
		return n;
	}

private:
	void skip()
	{
		while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
			++pos_;
	}

	[[noreturn]] void fail(const std::string& what) const
	{
		throw std::invalid_argument("tree '" + std::string(text_) + "': " + what + " at offset " +
		                            std::to_string(pos_));
	}

	Node parse_node()
	{
		skip();
		if (pos_ >= text_.size())
			fail("unexpected end");
		Node n;
		if (text_[pos_] == '(')
		{
			++pos_;
			for (;;)
			{
				skip();
				if (pos_ >= text_.size())
					fail("missing ')'");
				if (text_[pos_] == ')')
				{
					++pos_;
					break;
				}
				n.kids.push_back(parse_node());
			}
			if (n.kids.empty())
				fail("empty vertex");
			return n;
		}
		const std::size_t start = pos_;
		while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
			++pos_;
		if (start == pos_)
			fail("unexpected character");
		n.name = std::string(text_.substr(start, pos_ - start));
		return n;
	}

	std::string_view text_;
	std::size_t pos_ = 0;
};

using Resolver = std::function<Letter(const std::string&)>;

TreeDiagram build(const Node& top, int genus, const Resolver& resolve)
{
	using V = TreeDiagram::Vertex;
	std::vector<V> vs;
	std::function<int(const Node&, int)> attach = [&](const Node& n, int parent) -> int {
		const int id = static_cast<int>(vs.size());
		if (n.is_leaf())
		{
			V leaf;
			leaf.color = resolve(n.name);
			leaf.nbr = {parent, -1, -1};
			vs.push_back(leaf);
			return id;
		}
		if (n.kids.size() != 2)
			throw std::invalid_argument("tree: inner vertices must have exactly two children");
		V inner;
		inner.leaf = false;
		vs.push_back(inner);
		const int u = attach(n.kids[0], id);
		const int v = attach(n.kids[1], id);
		vs[static_cast<std::size_t>(id)].nbr = {u, v, parent};
		return id;
	};
	auto triple = [&](const Node& x, const Node& y, const Node& z) {
		V root;
		root.leaf = false;
		vs.push_back(root);
		const int a = attach(x, 0), b = attach(y, 0), c = attach(z, 0);
		vs[0].nbr = {a, b, c};
	};

	if (top.is_leaf())
		throw std::invalid_argument("tree: a single leaf is not a diagram");
	if (top.kids.size() == 3)
		triple(top.kids[0], top.kids[1], top.kids[2]);
	else if (top.kids.size() == 2)
	{
		const Node& x = top.kids[0];
		const Node& y = top.kids[1];
		if (x.is_leaf() && y.is_leaf())
		{
			V a, b;
			a.color = resolve(x.name);
			b.color = resolve(y.name);
			a.nbr = {1, -1, -1};
			b.nbr = {0, -1, -1};
			vs = {a, b};
		}
		else if (!x.is_leaf())
		{
			if (x.kids.size() != 2)
				throw std::invalid_argument("tree: inner vertices must have exactly two children");
			triple(x.kids[0], x.kids[1], y);
		}
		else
		{
			if (y.kids.size() != 2)
				throw std::invalid_argument("tree: inner vertices must have exactly two children");
			triple(y.kids[0], y.kids[1], x);
		}
	}
	else
		throw std::invalid_argument("tree: the outer vertex must have two or three entries");
	return TreeDiagram::from_vertices(genus, std::move(vs));
}

// Neighbours of trivalent v following `from` in cyclic order.
std::pair<int, int> after(const TreeDiagram::Vertex& v, int from)
{
	for (int p = 0; p < 3; ++p)
		if (v.nbr[static_cast<std::size_t>(p)] == from)
			return {v.nbr[static_cast<std::size_t>((p + 1) % 3)], v.nbr[static_cast<std::size_t>((p + 2) % 3)]};
	throw std::logic_error("tree: inconsistent adjacency");
}

std::string color_name(Letter l)
{
	return to_string(gen_name(l));
}

struct Encoding
{
	int sign = 0;
	std::string text;
};

Encoding encode(const TreeDiagram& t, int v, int from)
{
	const auto& vx = t.vertices()[static_cast<std::size_t>(v)];
	if (vx.leaf)
		return {1, color_name(vx.color)};
	auto [y1, y2] = after(vx, from);
	Encoding e1 = encode(t, y1, v);
	if (e1.sign == 0)
		return {};
	Encoding e2 = encode(t, y2, v);
	if (e2.sign == 0 || e1.text == e2.text)
		return {};
	int sign = e1.sign * e2.sign;
	if (e2.text < e1.text)
	{
		std::swap(e1, e2);
		sign = -sign;
	}
	return {sign, "(" + e1.text + " " + e2.text + ")"};
}

std::string written(const TreeDiagram& t, int v, int from)
{
	const auto& vx = t.vertices()[static_cast<std::size_t>(v)];
	if (vx.leaf)
		return color_name(vx.color);
	auto [y1, y2] = after(vx, from);
	return "(" + written(t, y1, v) + " " + written(t, y2, v) + ")";
}

std::string caterpillar(const std::vector<Letter>& colors)
{
	const std::size_t n = colors.size();  // degree + 2 leaves
	if (n == 3)
		return "(" + color_name(colors[0]) + " " + color_name(colors[1]) + " " + color_name(colors[2]) + ")";
	std::string inner = "(" + color_name(colors[0]) + " " + color_name(colors[1]) + ")";
	for (std::size_t i = 2; i + 2 < n; ++i)
		inner = "(" + inner + " " + color_name(colors[i]) + ")";
	return "(" + inner + " " + color_name(colors[n - 2]) + " " + color_name(colors[n - 1]) + ")";
}

// Row index of h ⊗ e in the coordinates of H ⊗ L_{m}.
struct HLCoords
{
	LyndonId begin = 0;
	std::size_t width = 0;

	std::size_t row(Letter h, LyndonId id) const { return static_cast<std::size_t>(h) * width + (id - begin); }
};

HLCoords hl_coords(int genus, int m)
{
	auto t = LyndonTable::get(genus, m);
	return {t->begin_of_degree(m), static_cast<std::size_t>(t->end_of_degree(m) - t->begin_of_degree(m))};
}

struct EtaBasis
{
	std::vector<std::string> keys;
	std::unique_ptr<LinearSolver> solver;
};

const EtaBasis& eta_basis(int genus, int d)
{
	static std::mutex mutex;
	static std::map<std::pair<int, int>, std::unique_ptr<EtaBasis>> cache;
	{
		std::lock_guard lock(mutex);
		if (auto it = cache.find({genus, d}); it != cache.end())
			return *it->second;
	}
	if (genus < 1 || d < 1)
		throw std::invalid_argument("tree basis: genus and degree must be >= 1");

	std::set<std::string> seen;
	std::vector<std::string> keys;
	const int leaves = d + 2;
	std::vector<Letter> colors(static_cast<std::size_t>(leaves), 0);
	const int alphabet = 2 * genus;
	for (;;)
	{
		const TreeDiagram t = TreeDiagram::parse(caterpillar(colors), genus);
		const auto c = t.canonical();
		if (c.sign != 0 && seen.insert(c.key).second)
			keys.push_back(c.key);
		int p = leaves - 1;
		while (p >= 0 && colors[static_cast<std::size_t>(p)] == alphabet - 1)
			colors[static_cast<std::size_t>(p--)] = 0;
		if (p < 0)
			break;
		++colors[static_cast<std::size_t>(p)];
	}

	const HLCoords hc = hl_coords(genus, d + 1);
	const std::size_t rows = static_cast<std::size_t>(alphabet) * hc.width;
	std::vector<SparseRow> columns;
	for (const auto& key : keys)
	{
		const HLieTensor e = eta(TreeDiagram::parse(key, genus));
		SparseRow col;
		for (const auto& [k, c] : e.terms())
			col.emplace_back(hc.row(k.first, k.second), c);
		std::sort(col.begin(), col.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
		columns.push_back(std::move(col));
	}
	// rows of the transpose are the η-images; pivots of the rref of the
	// column matrix are the first independent trees
	MatrixQ m(rows, keys.size());
	for (std::size_t j = 0; j < columns.size(); ++j)
		for (const auto& [r, c] : columns[j])
			m.add(r, j, c);
	const RrefResult rr = rref(m);
	const std::size_t expected = tree_space_dim(genus, d);
	if (rr.rank != expected)
		throw std::logic_error("tree basis: caterpillars span " + std::to_string(rr.rank) + " dimensions, expected " +
		                       std::to_string(expected));
	auto basis = std::make_unique<EtaBasis>();
	MatrixQ sub(rows, rr.pivot_cols.size());
	for (std::size_t j = 0; j < rr.pivot_cols.size(); ++j)
	{
		basis->keys.push_back(keys[rr.pivot_cols[j]]);
		for (const auto& [r, c] : columns[rr.pivot_cols[j]])
			sub.add(r, j, c);
	}
	basis->solver = std::make_unique<LinearSolver>(sub);

	std::lock_guard lock(mutex);
	auto [it, inserted] = cache.emplace(std::pair{genus, d}, std::move(basis));
	return *it->second;
}

} // namespace

// ---------------------------------------------------------------------------

TreeDiagram TreeDiagram::parse(std::string_view text, int genus)
{
	if (genus < 1)
		throw std::invalid_argument("tree: genus must be >= 1");
	Node top = Parser(text).parse_all();
	return build(top, genus, [genus](const std::string& name) { return letter_of(parse_gen_name(name, genus)); });
}

TreeDiagram TreeDiagram::strut(int genus, Letter x, Letter y)
{
	Vertex a, b;
	a.color = x;
	b.color = y;
	a.nbr = {1, -1, -1};
	b.nbr = {0, -1, -1};
	return from_vertices(genus, {a, b});
}

TreeDiagram TreeDiagram::from_vertices(int genus, std::vector<Vertex> vertices)
{
	const int n = static_cast<int>(vertices.size());
	if (n < 2)
		throw std::invalid_argument("tree: needs at least two vertices");
	auto valid = [n](int v) { return v >= 0 && v < n; };
	auto links_back = [&](int v, int to) {
		const auto& x = vertices[static_cast<std::size_t>(v)];
		if (x.leaf)
			return x.nbr[0] == to;
		return x.nbr[0] == to || x.nbr[1] == to || x.nbr[2] == to;
	};
	std::size_t edge_ends = 0;
	for (int v = 0; v < n; ++v)
	{
		const auto& x = vertices[static_cast<std::size_t>(v)];
		if (x.leaf && x.color >= 2 * genus)
			throw std::invalid_argument("tree: leaf color exceeds genus");
		const int deg = x.leaf ? 1 : 3;
		for (int i = 0; i < deg; ++i)
		{
			const int w = x.nbr[static_cast<std::size_t>(i)];
			if (!valid(w) || w == v || !links_back(w, v))
				throw std::invalid_argument("tree: inconsistent adjacency");
		}
		if (!x.leaf && (x.nbr[0] == x.nbr[1] || x.nbr[1] == x.nbr[2] || x.nbr[0] == x.nbr[2]))
			throw std::invalid_argument("tree: multiple edges");
		edge_ends += static_cast<std::size_t>(deg);
	}
	if (edge_ends != 2 * static_cast<std::size_t>(n - 1))
		throw std::invalid_argument("tree: not a tree");
	// connectivity
	std::vector<bool> seen(static_cast<std::size_t>(n), false);
	std::vector<int> stack{0};
	seen[0] = true;
	int count = 0;
	while (!stack.empty())
	{
		const int v = stack.back();
		stack.pop_back();
		++count;
		const auto& x = vertices[static_cast<std::size_t>(v)];
		for (int i = 0; i < (x.leaf ? 1 : 3); ++i)
		{
			const int w = x.nbr[static_cast<std::size_t>(i)];
			if (!seen[static_cast<std::size_t>(w)])
			{
				seen[static_cast<std::size_t>(w)] = true;
				stack.push_back(w);
			}
		}
	}
	if (count != n)
		throw std::invalid_argument("tree: not connected");
	TreeDiagram t;
	t.genus_ = genus;
	t.vertices_ = std::move(vertices);
	return t;
}

int TreeDiagram::degree() const
{
	return static_cast<int>(std::count_if(vertices_.begin(), vertices_.end(), [](const Vertex& v) { return !v.leaf; }));
}

std::vector<int> TreeDiagram::leaves() const
{
	std::vector<int> out;
	for (int v = 0; v < static_cast<int>(vertices_.size()); ++v)
		if (vertices_[static_cast<std::size_t>(v)].leaf)
			out.push_back(v);
	return out;
}

std::string TreeDiagram::to_string() const
{
	const int r = leaves().front();
	const Vertex& root = vertices_[static_cast<std::size_t>(r)];
	const int v = root.nbr[0];
	const Vertex& vx = vertices_[static_cast<std::size_t>(v)];
	if (vx.leaf)
		return "(" + color_name(root.color) + " " + color_name(vx.color) + ")";
	auto [y1, y2] = after(vx, r);
	return "(" + color_name(root.color) + " " + written(*this, y1, v) + " " + written(*this, y2, v) + ")";
}

TreeDiagram::Canonical TreeDiagram::canonical() const
{
	if (degree() == 0)
	{
		std::string x = color_name(vertices_[0].color), y = color_name(vertices_[1].color);
		if (y < x)
			std::swap(x, y);
		return {1, "(" + x + " " + y + ")"};
	}
	Canonical best;
	bool have = false;
	for (int r : leaves())
	{
		const int v = vertices_[static_cast<std::size_t>(r)].nbr[0];
		auto [y1, y2] = after(vertices_[static_cast<std::size_t>(v)], r);
		Encoding e1 = encode(*this, y1, v);
		Encoding e2 = encode(*this, y2, v);
		if (e1.sign == 0 || e2.sign == 0 || e1.text == e2.text)
			return {};
		int sign = e1.sign * e2.sign;
		if (e2.text < e1.text)
		{
			std::swap(e1, e2);
			sign = -sign;
		}
		std::string key = "(" + color_name(vertices_[static_cast<std::size_t>(r)].color) + " " + e1.text + " " +
		                  e2.text + ")";
		if (!have || key < best.key)
		{
			best = {sign, std::move(key)};
			have = true;
		}
		else if (key == best.key && sign != best.sign)
			return {};  // an orientation-reversing symmetry
	}
	return best;
}

TreeDiagram TreeDiagram::flipped(int v) const
{
	TreeDiagram t = *this;
	auto& x = t.vertices_.at(static_cast<std::size_t>(v));
	if (x.leaf)
		throw std::invalid_argument("flipped: not a trivalent vertex");
	std::swap(x.nbr[1], x.nbr[2]);
	return t;
}

LieSeries TreeDiagram::branch(int v, int from, int max_degree) const
{
	const Vertex& x = vertices_.at(static_cast<std::size_t>(v));
	if (x.leaf)
		return max_degree >= 1 ? LieSeries::generator(genus_, max_degree, x.color) : LieSeries(genus_, max_degree);
	auto [y1, y2] = after(x, from);
	return bracket(branch(y1, v, max_degree), branch(y2, v, max_degree));
}

LieSeries TreeDiagram::comm(int root_leaf, int max_degree) const
{
	const Vertex& r = vertices_.at(static_cast<std::size_t>(root_leaf));
	if (!r.leaf)
		throw std::invalid_argument("comm: root is not a leaf");
	return branch(r.nbr[0], root_leaf, max_degree);
}

// ---------------------------------------------------------------------------

TreeCombo TreeCombo::single(const TreeDiagram& t, const Rational& c)
{
	TreeCombo out(t.genus());
	out.add(t, c);
	return out;
}

void TreeCombo::add(const TreeDiagram& t, const Rational& c)
{
	if (t.genus() != genus_)
		throw std::invalid_argument("TreeCombo::add: genus mismatch");
	const auto canon = t.canonical();
	if (canon.sign == 0)
		return;
	accumulate(terms_, canon.key, canon.sign > 0 ? c : Rational(-c));
}

void TreeCombo::add(const std::string& text, const Rational& c)
{
	add(TreeDiagram::parse(text, genus_), c);
}

TreeCombo& TreeCombo::operator+=(const TreeCombo& o)
{
	if (genus_ != o.genus_)
		throw std::invalid_argument("TreeCombo +: genus mismatch");
	for (const auto& [k, c] : o.terms_)
		accumulate(terms_, k, c);
	return *this;
}

TreeCombo& TreeCombo::operator-=(const TreeCombo& o)
{
	if (genus_ != o.genus_)
		throw std::invalid_argument("TreeCombo -: genus mismatch");
	for (const auto& [k, c] : o.terms_)
		accumulate(terms_, k, Rational(-c));
	return *this;
}

TreeCombo& TreeCombo::operator*=(const Rational& c)
{
	scale(terms_, c);
	return *this;
}

std::string TreeCombo::to_string() const
{
	if (terms_.empty())
		return "0";
	std::ostringstream os;
	bool first = true;
	for (const auto& [k, c] : terms_)
	{
		Rational mag = abs(c);
		if (first)
			os << (sgn(c) < 0 ? "-" : "");
		else
			os << (sgn(c) < 0 ? " - " : " + ");
		if (mag != 1)
			os << treelie::to_string(mag) << "*";
		os << k;
		first = false;
	}
	return os.str();
}

// ---------------------------------------------------------------------------

WedgeChain fission(const TreeDiagram& t, int k)
{
	if (t.degree() == 0)
		throw std::invalid_argument("fission: struts have no trivalent vertex");
	WedgeChain out(t.genus(), k, 3);
	const auto& vs = t.vertices();
	for (int v = 0; v < static_cast<int>(vs.size()); ++v)
	{
		const auto& x = vs[static_cast<std::size_t>(v)];
		if (x.leaf)
			continue;
		out += WedgeChain::wedge({t.branch(x.nbr[0], v, k), t.branch(x.nbr[1], v, k), t.branch(x.nbr[2], v, k)});
	}
	return out;
}

WedgeChain fission(const TreeCombo& c, int k)
{
	WedgeChain out(c.genus(), k, 3);
	for (const auto& [key, coef] : c.terms())
		out += fission(TreeDiagram::parse(key, c.genus()), k) * coef;
	return out;
}

WedgeChain leaf_wedge_sum(const TreeDiagram& t, int k)
{
	WedgeChain out(t.genus(), k, 2);
	for (int v : t.leaves())
		out += WedgeChain::wedge({LieSeries::generator(t.genus(), k, t.vertices()[static_cast<std::size_t>(v)].color),
		                          t.comm(v, k)});
	return out;
}

HLieTensor eta(const TreeDiagram& t)
{
	HLieTensor out(t.genus());
	const int n = t.degree() + 1;
	for (int v : t.leaves())
		out.add(t.vertices()[static_cast<std::size_t>(v)].color, t.comm(v, n));
	return out;
}

HLieTensor eta(const TreeCombo& c)
{
	HLieTensor out(c.genus());
	for (const auto& [key, coef] : c.terms())
		out += eta(TreeDiagram::parse(key, c.genus())) * coef;
	return out;
}

bool tree_equal(const TreeCombo& x, const TreeCombo& y)
{
	if (x.genus() != y.genus())
		throw std::invalid_argument("tree_equal: genus mismatch");
	return eta(x) == eta(y);
}

std::size_t tree_space_dim(int genus, int d)
{
	if (d < 1)
		throw std::invalid_argument("tree_space_dim: degree must be >= 1");
	static std::mutex mutex;
	static std::map<std::pair<int, int>, std::size_t> cache;
	{
		std::lock_guard lock(mutex);
		if (auto it = cache.find({genus, d}); it != cache.end())
			return it->second;
	}
	auto t = LyndonTable::get(genus, d + 2);
	const HLCoords hc = hl_coords(genus, d + 1);
	const LyndonId out0 = t->begin_of_degree(d + 2);
	MatrixQ m(t->end_of_degree(d + 2) - out0, static_cast<std::size_t>(2 * genus) * hc.width);
	for (int h = 0; h < 2 * genus; ++h)
		for (LyndonId e = hc.begin; e < hc.begin + hc.width; ++e)
			for (const auto& [s, c] : t->bracket(t->letter_id(static_cast<Letter>(h)), e))
				m.add(s - out0, hc.row(static_cast<Letter>(h), e), Rational(c));
	const std::size_t dim = m.cols() - rank(m);
	std::lock_guard lock(mutex);
	cache[{genus, d}] = dim;
	return dim;
}

const std::vector<std::string>& tree_basis(int genus, int d)
{
	return eta_basis(genus, d).keys;
}

TreeCombo eta_inverse(const HLieTensor& x, int d)
{
	TreeCombo out(x.genus());
	if (x.is_zero())
		return out;
	if (x.lowest_degree() != d + 1 || x.highest_degree() != d + 1)
		throw std::domain_error("eta_inverse: tensor is not homogeneous of Lie degree " + std::to_string(d + 1));
	if (!x.bracket_contraction().is_zero())
		throw std::domain_error("eta_inverse: tensor is not in the kernel of the bracket");
	const EtaBasis& basis = eta_basis(x.genus(), d);
	const HLCoords hc = hl_coords(x.genus(), d + 1);
	VectorQ b(basis.solver->rows(), Rational(0));
	for (const auto& [k, c] : x.terms())
		b[hc.row(k.first, k.second)] = c;
	auto sol = basis.solver->solve(b);
	if (!sol)
		throw std::logic_error("eta_inverse: kernel element outside the span of the tree basis");
	for (std::size_t j = 0; j < sol->size(); ++j)
		if (!is_zero((*sol)[j]))
			out.add(basis.keys[j], (*sol)[j]);
	return out;
}

TreeDiagram random_tree(int genus, int degree, std::mt19937_64& rng)
{
	if (genus < 1 || degree < 0)
		throw std::invalid_argument("random_tree: invalid genus or degree");
	auto color = [&] { return static_cast<Letter>(rng() % static_cast<std::uint64_t>(2 * genus)); };
	if (degree == 0)
	{
		const Letter x = color();
		return TreeDiagram::strut(genus, x, color());
	}
	using V = TreeDiagram::Vertex;
	std::vector<V> vs(4);
	vs[0].leaf = false;
	vs[0].nbr = {1, 2, 3};
	for (int i = 1; i <= 3; ++i)
		vs[static_cast<std::size_t>(i)].nbr = {0, -1, -1};
	std::vector<int> leaves{1, 2, 3};
	for (int step = 1; step < degree; ++step)
	{
		const std::size_t pick = static_cast<std::size_t>(rng() % leaves.size());
		const int v = leaves[pick];
		const int a = static_cast<int>(vs.size()), b = a + 1;
		V la, lb;
		la.nbr = {v, -1, -1};
		lb.nbr = {v, -1, -1};
		vs.push_back(la);
		vs.push_back(lb);
		auto& x = vs[static_cast<std::size_t>(v)];
		x.leaf = false;
		x.nbr = {x.nbr[0], a, b};
		leaves[pick] = a;
		leaves.push_back(b);
	}
	for (auto& v : vs)
		if (v.leaf)
			v.color = color();
	return TreeDiagram::from_vertices(genus, std::move(vs));
}

TreeCombo multilinear_tree(std::string_view shape, const std::vector<SparseQ<Letter>>& colors, int genus)
{
	Node top = Parser(shape).parse_all();
	std::vector<std::size_t> slots;
	std::function<void(const Node&)> collect = [&](const Node& n) {
		if (n.is_leaf())
		{
			std::size_t s = 0;
			try
			{
				s = std::stoul(n.name);
			}
			catch (const std::exception&)
			{
				throw std::invalid_argument("multilinear_tree: leaf '" + n.name + "' is not a slot number");
			}
			if (s >= colors.size() || std::find(slots.begin(), slots.end(), s) != slots.end())
				throw std::invalid_argument("multilinear_tree: bad or repeated slot " + n.name);
			slots.push_back(s);
		}
		for (const auto& k : n.kids)
			collect(k);
	};
	collect(top);

	TreeCombo out(genus);
	std::vector<Letter> choice(colors.size(), 0);
	std::function<void(std::size_t, const Rational&)> rec = [&](std::size_t i, const Rational& c) {
		if (i == slots.size())
		{
			out.add(build(top, genus, [&](const std::string& name) { return choice[std::stoul(name)]; }), c);
			return;
		}
		for (const auto& [l, v] : colors[slots[i]])
		{
			choice[slots[i]] = l;
			rec(i + 1, c * v);
		}
	};
	rec(0, Rational(1));
	return out;
}

} // namespace treelie
