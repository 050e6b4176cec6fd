#pragma once

#include "treelie/rational.hpp"

#include <map>

namespace treelie {

/// Ordered sparse vector over Q with no stored zeros.
template <class Key> using SparseQ = std::map<Key, Rational>;

template <class Key>
void accumulate(SparseQ<Key>& acc, const Key& key, const Rational& value)
{
	if (is_zero(value))
		return;
	auto [it, inserted] = acc.try_emplace(key, value);
	if (!inserted)
	{
		it->second += value;
		if (is_zero(it->second))
			acc.erase(it);
	}
}

template <class Key>
void accumulate(SparseQ<Key>& acc, const SparseQ<Key>& other,
                const Rational& factor)
{
	if (is_zero(factor))
		return;
	Rational t;
	for (const auto& [k, v] : other)
	{
		t = v * factor;
		accumulate(acc, k, t);
	}
}

template <class Key> void scale(SparseQ<Key>& acc, const Rational& factor)
{
	if (is_zero(factor))
	{
		acc.clear();
		return;
	}
	for (auto& [k, v] : acc)
		v *= factor;
}

} // namespace treelie
