#include "kernelsplit/catalog.hpp"

#include <array>
#include <cctype>
#include <numeric>
#include <sstream>

#include "kernelsplit/config.hpp"
#include "kernelsplit/error.hpp"
#include "kernelsplit/group_ops.hpp"

namespace ks {

namespace {

bool is_prime(unsigned n) {
  if (n < 2) return false;
  for (unsigned d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::uint64_t checked_factorial(unsigned n) {
  std::uint64_t f = 1;
  for (unsigned i = 2; i <= n; ++i) {
    if (f > UINT64_MAX / i)
      fail(ErrorKind::InvalidInput, "degree too large for exact order checks");
    f *= i;
  }
  return f;
}

}  // namespace

SmallField::SmallField(unsigned q) : q_(q) {
  struct Ext {
    unsigned q, p, k;
    std::array<unsigned, 3> modulus;  // low coefficients of the monic modulus
  };
  static constexpr Ext kExts[] = {
      {4, 2, 2, {1, 1, 0}},  // x^2 + x + 1
      {8, 2, 3, {1, 1, 0}},  // x^3 + x + 1
      {9, 3, 2, {1, 0, 0}},  // x^2 + 1
  };

  unsigned k = 1;
  const Ext* ext = nullptr;
  if (is_prime(q)) {
    p_ = q;
  } else {
    for (const Ext& e : kExts)
      if (e.q == q) ext = &e;
    if (!ext) fail(ErrorKind::InvalidInput, "unsupported field size");
    p_ = ext->p;
    k = ext->k;
  }

  auto digits = [&](unsigned a) {
    std::array<unsigned, 3> d{0, 0, 0};
    for (unsigned i = 0; i < k; ++i, a /= p_) d[i] = a % p_;
    return d;
  };
  auto undigits = [&](const std::array<unsigned, 3>& d) {
    unsigned a = 0;
    for (unsigned i = k; i-- > 0;) a = a * p_ + d[i];
    return a;
  };

  add_.resize(q_ * q_);
  mul_.resize(q_ * q_);
  neg_.resize(q_);
  for (unsigned a = 0; a < q_; ++a) {
    auto da = digits(a);
    std::array<unsigned, 3> dn{0, 0, 0};
    for (unsigned i = 0; i < k; ++i) dn[i] = (p_ - da[i]) % p_;
    neg_[a] = undigits(dn);
    for (unsigned b = 0; b < q_; ++b) {
      auto db = digits(b);
      std::array<unsigned, 3> ds{0, 0, 0};
      for (unsigned i = 0; i < k; ++i) ds[i] = (da[i] + db[i]) % p_;
      add_[a * q_ + b] = undigits(ds);

      // Polynomial product reduced by the modulus; plain modular product
      // in the prime case (k == 1 follows the same code path).
      std::array<unsigned, 5> prod{0, 0, 0, 0, 0};
      for (unsigned i = 0; i < k; ++i)
        for (unsigned j = 0; j < k; ++j)
          prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
      for (unsigned deg = 2 * (k - 1); deg >= k && deg < prod.size(); --deg) {
        unsigned c = prod[deg];
        if (c == 0) continue;
        prod[deg] = 0;
        // x^k = -(modulus tail), so fold c*x^deg down by the modulus.
        for (unsigned i = 0; i < k; ++i)
          prod[deg - k + i] =
              (prod[deg - k + i] + c * ((p_ - ext->modulus[i]) % p_)) % p_;
      }
      std::array<unsigned, 3> dm{prod[0], prod[1], prod[2]};
      mul_[a * q_ + b] = undigits(dm);
    }
  }

  inv_.assign(q_, 0);
  for (unsigned a = 1; a < q_; ++a)
    for (unsigned b = 1; b < q_; ++b)
      if (mul_[a * q_ + b] == 1) inv_[a] = b;
  for (unsigned a = 1; a < q_; ++a)
    if (inv_[a] == 0) fail(ErrorKind::Internal, "field element without inverse");

  for (unsigned g = 1; g < q_; ++g) {
    unsigned x = g, steps = 1;
    while (x != 1) {
      x = mul_[x * q_ + g];
      ++steps;
    }
    if (steps == q_ - 1) {
      primitive_ = g;
      break;
    }
  }
  if (q_ > 2 && primitive_ == 0)
    fail(ErrorKind::Internal, "no primitive element found");
  if (q_ == 2) primitive_ = 1;
}

unsigned SmallField::inv(unsigned a) const {
  if (a == 0) fail(ErrorKind::InvalidInput, "division by zero in field");
  return inv_[a];
}

PermGroup make_alternating(unsigned n) {
  if (n < 1) fail(ErrorKind::InvalidInput, "alternating degree must be >= 1");
  if (n <= 2) return PermGroup(n);
  std::vector<std::vector<Perm::Pt>> three{{0, 1, 2}};
  Perm a = Perm::from_cycles(n, three);
  std::vector<Perm::Pt> big;
  for (unsigned i = (n % 2 == 0) ? 1 : 0; i < n; ++i)
    big.push_back(static_cast<Perm::Pt>(i));
  Perm b = Perm::from_cycles(n, {big});
  PermGroup g(n, {a, b});
  if (g.order() != checked_factorial(n) / 2)
    fail(ErrorKind::Internal, "alternating group has unexpected order");
  return g;
}

PermGroup make_symmetric(unsigned n) {
  if (n < 1) fail(ErrorKind::InvalidInput, "symmetric degree must be >= 1");
  if (n == 1) return PermGroup(1);
  Perm t = Perm::from_cycles(n, {{0, 1}});
  std::vector<Perm::Pt> big;
  for (unsigned i = 0; i < n; ++i) big.push_back(static_cast<Perm::Pt>(i));
  Perm c = Perm::from_cycles(n, {big});
  PermGroup g(n, {t, c});
  if (g.order() != checked_factorial(n))
    fail(ErrorKind::Internal, "symmetric group has unexpected order");
  return g;
}

PermGroup make_cyclic(unsigned n) {
  if (n < 1) fail(ErrorKind::InvalidInput, "cyclic order must be >= 1");
  if (n == 1) return PermGroup(1);
  std::vector<Perm::Pt> cyc;
  for (unsigned i = 0; i < n; ++i) cyc.push_back(static_cast<Perm::Pt>(i));
  PermGroup g(n, {Perm::from_cycles(n, {cyc})});
  if (g.order() != n) fail(ErrorKind::Internal, "cyclic group has unexpected order");
  return g;
}

PermGroup make_psl2(unsigned q) {
  switch (q) {
    case 4: case 5: case 7: case 8: case 9: case 11: case 13: break;
    default:
      fail(ErrorKind::InvalidInput, "unsupported projective line field size");
  }
  SmallField f(q);
  const unsigned n = q + 1;  // point q is infinity
  const auto inf = static_cast<Perm::Pt>(q);

  std::vector<Perm::Pt> t_img(n), m_img(n), s_img(n);
  unsigned kk = f.mul(f.primitive_element(), f.primitive_element());
  for (unsigned x = 0; x < q; ++x) {
    t_img[x] = static_cast<Perm::Pt>(f.add(x, 1));
    m_img[x] = static_cast<Perm::Pt>(f.mul(kk, x));
    s_img[x] = x == 0 ? inf : static_cast<Perm::Pt>(f.neg(f.inv(x)));
  }
  t_img[q] = inf;
  m_img[q] = inf;
  s_img[q] = 0;

  PermGroup g(n, {Perm::from_images(t_img), Perm::from_images(m_img),
                  Perm::from_images(s_img)});
  std::uint64_t expected =
      std::uint64_t(q) * (q - 1) * (q + 1) / std::gcd(2u, q - 1);
  if (g.order() != expected)
    fail(ErrorKind::Internal, "projective group has unexpected order");
  return g;
}

Perm embed_left(const Perm& p, unsigned right_degree) {
  std::vector<Perm::Pt> img(p.degree() + right_degree);
  for (unsigned x = 0; x < p.degree(); ++x) img[x] = p[static_cast<Perm::Pt>(x)];
  for (unsigned x = 0; x < right_degree; ++x)
    img[p.degree() + x] = static_cast<Perm::Pt>(p.degree() + x);
  return Perm::from_images(std::move(img));
}

Perm embed_right(unsigned left_degree, const Perm& p) {
  std::vector<Perm::Pt> img(left_degree + p.degree());
  for (unsigned x = 0; x < left_degree; ++x) img[x] = static_cast<Perm::Pt>(x);
  for (unsigned x = 0; x < p.degree(); ++x)
    img[left_degree + x] =
        static_cast<Perm::Pt>(left_degree + p[static_cast<Perm::Pt>(x)]);
  return Perm::from_images(std::move(img));
}

PermGroup direct_product(const PermGroup& a, const PermGroup& b) {
  std::vector<Perm> gens;
  for (const Perm& p : a.generators()) gens.push_back(embed_left(p, b.degree()));
  for (const Perm& p : b.generators()) gens.push_back(embed_right(a.degree(), p));
  PermGroup g(a.degree() + b.degree(), gens);
  if (g.order() != a.order() * b.order())
    fail(ErrorKind::Internal, "direct product has unexpected order");
  return g;
}

PermGroup semidirect_product(const ElementTable& n, const PermGroup& h,
                             const std::vector<Perm>& action) {
  if (action.size() != h.generators().size())
    fail(ErrorKind::InvalidInput,
         "need one kernel automorphism per quotient generator");
  for (const Perm& a : action) {
    if (a.degree() != n.size())
      fail(ErrorKind::InvalidInput, "action degree must be the kernel order");
    for (std::uint32_t e = 0; e < n.size(); ++e)
      for (std::uint32_t k = 0; k < n.generators().size(); ++k) {
        std::uint32_t gk = n.generator_index(k);
        if (a[static_cast<Perm::Pt>(n.mul(e, gk))] !=
            n.mul(a[static_cast<Perm::Pt>(e)], a[static_cast<Perm::Pt>(gk)]))
          fail(ErrorKind::InvalidInput,
               "action image is not an automorphism of the kernel");
      }
  }
  {
    GroupHom to_aut(ElementTable::build(h), n.size(), action);
    if (!to_aut.respects_products())
      fail(ErrorKind::InvalidInput,
           "action images do not respect the quotient's relations");
  }

  const unsigned deg = n.size() + h.degree();
  std::vector<Perm> gens;
  for (const Perm& g : n.generators()) {
    // Left multiplication on the kernel block.
    std::uint32_t gi = n.index_of(g);
    gens.push_back(embed_left(n.left_multiplication_map(gi), h.degree()));
  }
  for (std::size_t k = 0; k < action.size(); ++k)
    gens.push_back(embed_left(action[k], h.degree()) *
                   embed_right(n.size(), h.generators()[k]));

  PermGroup g(deg, gens);
  if (g.order() != std::uint64_t(n.size()) * h.order())
    fail(ErrorKind::Internal, "split extension has unexpected order");
  return g;
}

namespace {

NamedGroup parse_atom(const std::string& tok) {
  auto all_digits = [](const std::string& s) {
    if (s.empty()) return false;
    for (char c : s)
      if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
  };
  auto parse_num = [&](const std::string& s) -> unsigned {
    if (!all_digits(s) || s.size() > 5)
      fail(ErrorKind::ParseError, "bad numeric suffix in group name: " + tok);
    return static_cast<unsigned>(std::stoul(s));
  };

  if (tok.size() >= 2 && (tok[0] == 'A' || tok[0] == 'S' || tok[0] == 'C') &&
      std::isdigit(static_cast<unsigned char>(tok[1]))) {
    unsigned num = parse_num(tok.substr(1));
    PermGroup g = tok[0] == 'A'   ? make_alternating(num)
                  : tok[0] == 'S' ? make_symmetric(num)
                                  : make_cyclic(num);
    return {std::move(g), std::string(1, tok[0]) + std::to_string(num), false};
  }
  if (tok.rfind("PSL(2,", 0) == 0 && tok.back() == ')') {
    unsigned q = parse_num(tok.substr(6, tok.size() - 7));
    return {make_psl2(q), "PSL(2," + std::to_string(q) + ")", false};
  }
  fail(ErrorKind::ParseError, "unknown group name: " + tok);
}

}  // namespace

NamedGroup parse_group_spec(const std::string& text) {
  // Explicit generator lists: "perm:" followed by ';'-separated cycle strings.
  std::string s = text;
  auto trim = [](std::string& v) {
    while (!v.empty() && std::isspace(static_cast<unsigned char>(v.front())))
      v.erase(v.begin());
    while (!v.empty() && std::isspace(static_cast<unsigned char>(v.back())))
      v.pop_back();
  };
  trim(s);
  if (s.empty()) fail(ErrorKind::ParseError, "empty group description");

  if (s.rfind("perm:", 0) == 0) {
    std::string rest = s.substr(5);
    std::vector<std::string> parts;
    std::string cur;
    std::stringstream ss(rest);
    while (std::getline(ss, cur, ';')) {
      trim(cur);
      if (!cur.empty()) parts.push_back(cur);
    }
    if (parts.empty())
      fail(ErrorKind::ParseError, "no generators in permutation description");
    unsigned deg = 1;
    for (const std::string& p : parts)
      deg = std::max(deg, Perm::parse_cycles(p).degree());
    std::vector<Perm> gens;
    for (const std::string& p : parts) gens.push_back(Perm::parse_cycles(p, deg));
    PermGroup g(deg, gens);
    std::string name = "perm:";
    for (std::size_t i = 0; i < gens.size(); ++i)
      name += (i ? "; " : "") + gens[i].cycle_string();
    return {std::move(g), name, false};
  }

  // Tokenize on whitespace; atoms alternate with the product separator "x".
  std::vector<std::string> toks;
  {
    std::stringstream ss(s);
    std::string t;
    while (ss >> t) toks.push_back(t);
  }
  std::vector<NamedGroup> atoms;
  for (std::size_t i = 0; i < toks.size(); ++i) {
    if (i % 2 == 1) {
      if (toks[i] != "x")
        fail(ErrorKind::ParseError, "expected 'x' between group names");
      continue;
    }
    atoms.push_back(parse_atom(toks[i]));
  }
  if (toks.size() % 2 == 0)
    fail(ErrorKind::ParseError, "dangling product separator");

  const bool square = atoms.size() == 2 && atoms[0].name == atoms[1].name;
  NamedGroup out = std::move(atoms[0]);
  for (std::size_t i = 1; i < atoms.size(); ++i) {
    out.group = direct_product(out.group, atoms[i].group);
    out.name += " x " + atoms[i].name;
  }
  out.square_product = square;
  return out;
}

}  // namespace ks
