#include "treelie/automorphism.hpp"

#include <stdexcept>
#include <unordered_map>

namespace treelie {

namespace {

void check_images(int genus, int max_degree, const std::vector<LieSeries>& images, const char* what)
{
	if (images.size() != static_cast<std::size_t>(2 * genus))
		throw std::invalid_argument(std::string(what) + ": expected one image per generator");
	for (const auto& x : images)
		if (x.genus() != genus || x.max_degree() != max_degree)
			throw std::invalid_argument(std::string(what) + ": image context mismatch");
}

class AutAction
{
public:
	explicit AutAction(const LieAutomorphism& psi) : psi_(psi), table_(LyndonTable::get(psi.genus(), psi.max_degree())) {}

	LieSeries operator()(const LieSeries& x)
	{
		require_same_context(x, psi_.image(0), "apply_aut");
		LieSeries out(psi_.genus(), psi_.max_degree());
		for (const auto& [id, c] : x.coords())
			out += basis_image(id) * c;
		return out;
	}

private:
	const LieSeries& basis_image(LyndonId id)
	{
		if (auto it = memo_.find(id); it != memo_.end())
			return it->second;
		LieSeries v = table_->degree(id) == 1
		                  ? psi_.image(table_->word(id)[0])
		                  : bracket(basis_image(table_->left(id)), basis_image(table_->right(id)));
		return memo_.emplace(id, std::move(v)).first->second;
	}

	const LieAutomorphism& psi_;
	std::shared_ptr<const LyndonTable> table_;
	std::unordered_map<LyndonId, LieSeries> memo_;
};

class DerAction
{
public:
	explicit DerAction(const Derivation& d) : delta_(d), table_(LyndonTable::get(d.genus(), d.max_degree())) {}

	LieSeries operator()(const LieSeries& x)
	{
		require_same_context(x, delta_.image(0), "apply_der");
		LieSeries out(delta_.genus(), delta_.max_degree());
		for (const auto& [id, c] : x.coords())
			out += basis_image(id) * c;
		return out;
	}

private:
	const LieSeries& basis_image(LyndonId id)
	{
		if (auto it = memo_.find(id); it != memo_.end())
			return it->second;
		LieSeries v(delta_.genus(), delta_.max_degree());
		if (table_->degree(id) == 1)
			v = delta_.image(table_->word(id)[0]);
		else
		{
			const int n = delta_.max_degree();
			const LyndonId l = table_->left(id), r = table_->right(id);
			const auto left = LieSeries::basis(delta_.genus(), n, l);
			const auto right = LieSeries::basis(delta_.genus(), n, r);
			v = bracket(basis_image(l), right) + bracket(left, basis_image(r));
		}
		return memo_.emplace(id, std::move(v)).first->second;
	}

	const Derivation& delta_;
	std::shared_ptr<const LyndonTable> table_;
	std::unordered_map<LyndonId, LieSeries> memo_;
};

} // namespace

LieAutomorphism LieAutomorphism::identity(int genus, int max_degree)
{
	LieAutomorphism psi;
	psi.genus_ = genus;
	psi.max_degree_ = max_degree;
	for (int l = 0; l < 2 * genus; ++l)
		psi.images_.push_back(LieSeries::generator(genus, max_degree, static_cast<Letter>(l)));
	return psi;
}

LieAutomorphism LieAutomorphism::from_images(int genus, int max_degree, std::vector<LieSeries> images)
{
	check_images(genus, max_degree, images, "LieAutomorphism");
	for (std::size_t l = 0; l < images.size(); ++l)
	{
		LieSeries dev = images[l] - LieSeries::generator(genus, max_degree, static_cast<Letter>(l));
		if (!dev.is_zero() && dev.lowest_degree() < 2)
			throw std::invalid_argument("LieAutomorphism: image of " + to_string(gen_name(static_cast<Letter>(l))) +
			                            " is not the generator plus degree >= 2 terms");
	}
	LieAutomorphism psi;
	psi.genus_ = genus;
	psi.max_degree_ = max_degree;
	psi.images_ = std::move(images);
	return psi;
}

LieSeries LieAutomorphism::deviation(Letter l) const
{
	return images_.at(l) - LieSeries::generator(genus_, max_degree_, l);
}

int LieAutomorphism::deviation_degree() const
{
	int lowest = max_degree_ + 1;
	for (int l = 0; l < 2 * genus_; ++l)
	{
		LieSeries d = deviation(static_cast<Letter>(l));
		if (!d.is_zero())
			lowest = std::min(lowest, d.lowest_degree());
	}
	return lowest;
}

Derivation Derivation::zero(int genus, int max_degree)
{
	Derivation d;
	d.genus_ = genus;
	d.max_degree_ = max_degree;
	d.images_.assign(static_cast<std::size_t>(2 * genus), LieSeries(genus, max_degree));
	return d;
}

Derivation Derivation::from_images(int genus, int max_degree, std::vector<LieSeries> images)
{
	check_images(genus, max_degree, images, "Derivation");
	for (const auto& x : images)
		if (!x.is_zero() && x.lowest_degree() < 2)
			throw std::invalid_argument("Derivation: values must lie in degree >= 2");
	Derivation d;
	d.genus_ = genus;
	d.max_degree_ = max_degree;
	d.images_ = std::move(images);
	return d;
}

bool Derivation::is_zero() const
{
	for (const auto& x : images_)
		if (!x.is_zero())
			return false;
	return true;
}

Derivation& Derivation::operator+=(const Derivation& o)
{
	if (genus_ != o.genus_ || max_degree_ != o.max_degree_)
		throw std::invalid_argument("Derivation +: context mismatch");
	for (std::size_t l = 0; l < images_.size(); ++l)
		images_[l] += o.images_[l];
	return *this;
}

LieSeries apply_aut(const LieAutomorphism& psi, const LieSeries& x)
{
	if (psi.genus() == 0)
		return x;
	AutAction act(psi);
	return act(x);
}

LieSeries apply_der(const Derivation& delta, const LieSeries& x)
{
	if (delta.genus() == 0)
		return LieSeries(x.genus(), x.max_degree());
	DerAction act(delta);
	return act(x);
}

LieAutomorphism compose(const LieAutomorphism& psi, const LieAutomorphism& phi)
{
	if (psi.genus() != phi.genus() || psi.max_degree() != phi.max_degree())
		throw std::invalid_argument("compose: context mismatch");
	AutAction act(psi);
	std::vector<LieSeries> images;
	for (const auto& x : phi.images())
		images.push_back(act(x));
	return LieAutomorphism::from_images(psi.genus(), psi.max_degree(), std::move(images));
}

LieAutomorphism inverse(const LieAutomorphism& psi)
{
	// phi_{k+1}(h) = phi_k(h) - (psi(phi_k(h)) - h) gains one degree per step
	// because psi - id raises degrees.
	const int n = psi.max_degree();
	AutAction act(psi);
	std::vector<LieSeries> images;
	for (int l = 0; l < 2 * psi.genus(); ++l)
	{
		const LieSeries h = LieSeries::generator(psi.genus(), n, static_cast<Letter>(l));
		LieSeries phi = h;
		for (int step = 0; step < n; ++step)
		{
			LieSeries err = act(phi) - h;
			if (err.is_zero())
				break;
			phi -= err;
		}
		images.push_back(std::move(phi));
	}
	return LieAutomorphism::from_images(psi.genus(), n, std::move(images));
}

LieAutomorphism exp_der(const Derivation& delta)
{
	const int n = delta.max_degree();
	DerAction act(delta);
	std::vector<LieSeries> images;
	for (int l = 0; l < 2 * delta.genus(); ++l)
	{
		LieSeries term = LieSeries::generator(delta.genus(), n, static_cast<Letter>(l));
		LieSeries sum = term;
		for (int k = 1; k < n; ++k)
		{
			term = act(term) * Rational(1, k);
			if (term.is_zero())
				break;
			sum += term;
		}
		images.push_back(std::move(sum));
	}
	return LieAutomorphism::from_images(delta.genus(), n, std::move(images));
}

LieSeries log_series_apply(const LieAutomorphism& psi, const LieSeries& x)
{
	AutAction act(psi);
	LieSeries sum(x.genus(), x.max_degree());
	LieSeries power = x;
	for (int k = 1; k <= x.max_degree(); ++k)
	{
		power = act(power) - power;
		if (power.is_zero())
			break;
		sum += power * Rational(k % 2 == 1 ? 1 : -1, k);
	}
	return sum;
}

Derivation log_aut(const LieAutomorphism& psi)
{
	std::vector<LieSeries> images;
	for (int l = 0; l < 2 * psi.genus(); ++l)
		images.push_back(log_series_apply(psi, LieSeries::generator(psi.genus(), psi.max_degree(), static_cast<Letter>(l))));
	return Derivation::from_images(psi.genus(), psi.max_degree(), std::move(images));
}

LieSeries omega(int genus, int max_degree)
{
	LieSeries w(genus, max_degree);
	if (max_degree < 2)
		return w;
	for (int i = 1; i <= genus; ++i)
		w += bracket(LieSeries::generator(genus, max_degree, GenName{'a', i}),
		             LieSeries::generator(genus, max_degree, GenName{'b', i}));
	return w;
}

bool is_omega_fixing(const LieAutomorphism& psi)
{
	LieSeries w = omega(psi.genus(), psi.max_degree());
	return apply_aut(psi, w) == w;
}

} // namespace treelie
