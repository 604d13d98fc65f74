#include "plg/observable.hpp"

#include <cctype>

namespace plg {

const std::array<std::string, 16>& Observable::coordinate_names()
{
	static const std::array<std::string, 16> n = {"t",   "a1",  "a2",  "a3",  "v1",  "v2",  "v3",  "R11",
	                                              "R12", "R13", "R21", "R22", "R23", "R31", "R32", "R33"};
	return n;
}

int Observable::coordinate_index(std::string_view name)
{
	const auto& n = coordinate_names();
	for (int i = 0; i < 16; ++i)
		if (n[i] == name)
			return i;
	throw UnsupportedObservable("unknown coordinate '" + std::string(name) + "'");
}

void Observable::add_term(const Exponents& e, const Rational& c)
{
	if (c.is_zero())
		return;
	auto [it, inserted] = terms_.emplace(e, c);
	if (!inserted) {
		it->second += c;
		if (it->second.is_zero())
			terms_.erase(it);
	}
}

Observable Observable::constant(const Rational& c)
{
	Observable o;
	o.add_term(Exponents{}, c);
	return o;
}

Observable Observable::coordinate(int index)
{
	if (index < 0 || index >= 16)
		throw UnsupportedObservable("coordinate index out of range");
	Observable o;
	Exponents e{};
	e[index] = 1;
	o.add_term(e, Rational(1));
	return o;
}

Observable Observable::coordinate(std::string_view name) { return coordinate(coordinate_index(name)); }

std::optional<int> Observable::as_coordinate() const
{
	if (terms_.size() != 1)
		return std::nullopt;
	const auto& [e, c] = *terms_.begin();
	if (c != Rational(1))
		return std::nullopt;
	int found = -1;
	for (int i = 0; i < 16; ++i) {
		if (e[i] == 0)
			continue;
		if (e[i] != 1 || found >= 0)
			return std::nullopt;
		found = i;
	}
	if (found < 0)
		return std::nullopt;
	return found;
}

Observable& Observable::operator+=(const Observable& o)
{
	for (const auto& [e, c] : o.terms_)
		add_term(e, c);
	return *this;
}

Observable& Observable::operator*=(const Observable& o)
{
	Observable r;
	for (const auto& [e1, c1] : terms_)
		for (const auto& [e2, c2] : o.terms_) {
			Exponents e{};
			for (int i = 0; i < 16; ++i) {
				int p = e1[i] + e2[i];
				if (p > 255)
					throw UnsupportedObservable("degree too large");
				e[i] = static_cast<std::uint8_t>(p);
			}
			r.add_term(e, c1 * c2);
		}
	*this = std::move(r);
	return *this;
}

Observable operator-(const Observable& a)
{
	Observable r;
	for (const auto& [e, c] : a.terms_)
		r.add_term(e, -c);
	return r;
}

std::string Observable::str() const
{
	if (terms_.empty())
		return "0";
	std::string out;
	const auto& n = coordinate_names();
	for (const auto& [e, c] : terms_) {
		std::string mono;
		for (int i = 0; i < 16; ++i) {
			if (e[i] == 0)
				continue;
			if (!mono.empty())
				mono += "*";
			mono += n[i];
			if (e[i] > 1)
				mono += "^" + std::to_string(e[i]);
		}
		std::string coeff = c.str();
		std::string term;
		if (mono.empty())
			term = coeff;
		else if (c == Rational(1))
			term = mono;
		else if (c == Rational(-1))
			term = "-" + mono;
		else
			term = coeff + "*" + mono;
		if (!out.empty() && term[0] != '-')
			out += "+";
		out += term;
	}
	return out;
}

namespace {

// Recursive descent over: expr = term {(+|-) term}; term = factor {* factor};
// factor = [-] atom [^ uint]; atom = rational | coordinate | ( expr ).
class Parser {
public:
	explicit Parser(std::string_view s) : s_(s) {}

	Observable parse()
	{
		Observable r = expr();
		skip();
		if (pos_ != s_.size())
			fail("unexpected '" + std::string(1, s_[pos_]) + "'");
		return r;
	}

private:
	[[noreturn]] void fail(const std::string& why) const
	{
		throw UnsupportedObservable("unsupported observable '" + std::string(s_) + "': " + why);
	}
	void skip()
	{
		while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
			++pos_;
	}
	bool eat(char c)
	{
		skip();
		if (pos_ < s_.size() && s_[pos_] == c) {
			++pos_;
			return true;
		}
		return false;
	}
	Observable expr()
	{
		Observable r = term();
		for (;;) {
			if (eat('+'))
				r += term();
			else if (eat('-'))
				r = r - term();
			else
				return r;
		}
	}
	Observable term()
	{
		Observable r = factor();
		while (eat('*'))
			r *= factor();
		skip();
		if (pos_ < s_.size() && s_[pos_] == '/')
			fail("division by a non-constant is not polynomial");
		return r;
	}
	Observable factor()
	{
		if (eat('-'))
			return -factor();
		Observable base = atom();
		if (eat('^')) {
			skip();
			std::size_t start = pos_;
			while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
				++pos_;
			if (start == pos_)
				fail("exponent must be a nonnegative integer");
			int p = std::stoi(std::string(s_.substr(start, pos_ - start)));
			Observable r = Observable::constant(Rational(1));
			for (int i = 0; i < p; ++i)
				r *= base;
			return r;
		}
		return base;
	}
	Observable atom()
	{
		skip();
		if (pos_ >= s_.size())
			fail("unexpected end");
		char c = s_[pos_];
		if (c == '(') {
			++pos_;
			Observable r = expr();
			if (!eat(')'))
				fail("missing ')'");
			return r;
		}
		if (std::isdigit(static_cast<unsigned char>(c))) {
			std::size_t start = pos_;
			while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
				++pos_;
			// A literal fraction p/q is a constant; p/x is rejected in term().
			if (pos_ + 1 < s_.size() && s_[pos_] == '/' && std::isdigit(static_cast<unsigned char>(s_[pos_ + 1]))) {
				++pos_;
				while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
					++pos_;
			}
			return Observable::constant(Rational::parse(s_.substr(start, pos_ - start)));
		}
		if (std::isalpha(static_cast<unsigned char>(c))) {
			std::size_t start = pos_;
			while (pos_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_])))
				++pos_;
			std::string_view name = s_.substr(start, pos_ - start);
			skip();
			if (pos_ < s_.size() && s_[pos_] == '(')
				fail("function '" + std::string(name) + "' is not polynomial");
			return Observable::coordinate(name);
		}
		fail("unexpected '" + std::string(1, c) + "'");
	}

	std::string_view s_;
	std::size_t pos_ = 0;
};

} // namespace

Observable Observable::parse(std::string_view text) { return Parser(text).parse(); }

} // namespace plg
