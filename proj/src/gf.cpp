#include "polytri/gf.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <mutex>

namespace polytri {

namespace {

// Minimal arithmetic on GF(p) polynomials (ascending uint8 coefficients),
// used only while bootstrapping a field's tables.
using PPoly = std::vector<std::uint8_t>;

void ptrim(PPoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

PPoly pmod(PPoly f, const PPoly& g, int p) {
    ptrim(f);
    const int dg = int(g.size()) - 1;
    while (int(f.size()) - 1 >= dg) {
        int shift = int(f.size()) - 1 - dg;
        int c = f.back();  // g is monic
        for (int j = 0; j <= dg; ++j) {
            int v = f[shift + j] - c * g[j];
            f[shift + j] = std::uint8_t(((v % p) + p) % p);
        }
        ptrim(f);
    }
    return f;
}

PPoly pmulmod(const PPoly& a, const PPoly& b, const PPoly& m, int p) {
    if (a.empty() || b.empty()) return {};
    PPoly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = std::uint8_t((r[i + j] + a[i] * b[j]) % p);
    return pmod(std::move(r), m, p);
}

bool irreducible_over_prime(const PPoly& f, int p) {
    const int d = int(f.size()) - 1;
    if (d < 1) return false;
    // Trial division by every monic polynomial of degree 1..d/2.
    for (int dd = 1; dd <= d / 2; ++dd) {
        long long count = 1;
        for (int j = 0; j < dd; ++j) count *= p;
        for (long long v = 0; v < count; ++v) {
            PPoly g(dd + 1, 0);
            long long t = v;
            for (int j = 0; j < dd; ++j) {
                g[j] = std::uint8_t(t % p);
                t /= p;
            }
            g[dd] = 1;
            if (pmod(f, g, p).empty()) return false;
        }
    }
    return true;
}

}  // namespace

Field::Field(int p, int w) : p_(p), w_(w) {
    long long q = 1;
    for (int j = 0; j < w; ++j) q *= p;
    if (w < 1 || q > 64) throw Error("unsupported field: q must be p^w <= 64");
    q_ = int(q);

    if (w_ == 1) {
        modulus_ = {0, 1};
    } else {
        // Lexicographically least monic irreducible of degree w whose root x
        // is primitive; such a polynomial always exists.
        PPoly best_irreducible;
        long long span = 1;
        for (int j = 0; j < w_; ++j) span *= p_;
        for (long long v = 0; v < span && modulus_.empty(); ++v) {
            PPoly f(w_ + 1, 0);
            long long t = v;
            for (int j = 0; j < w_; ++j) {
                f[j] = std::uint8_t(t % p_);
                t /= p_;
            }
            f[w_] = 1;
            if (!irreducible_over_prime(f, p_)) continue;
            if (best_irreducible.empty()) best_irreducible = f;
            // Order of x in GF(p)[x]/f.
            PPoly x = {0, 1}, acc = x;
            int ord = 1;
            while (!(acc.size() == 1 && acc[0] == 1)) {
                acc = pmulmod(acc, x, f, p_);
                ++ord;
                if (ord > q_) break;
            }
            if (ord == q_ - 1) modulus_ = f;
        }
        if (modulus_.empty()) modulus_ = best_irreducible;
    }

    auto decode = [&](Elem x) {
        PPoly r(w_, 0);
        int t = x;
        for (int j = 0; j < w_; ++j) {
            r[j] = std::uint8_t(t % p_);
            t /= p_;
        }
        ptrim(r);
        return r;
    };
    auto encode = [&](const PPoly& f) {
        int v = 0, pw = 1;
        for (std::size_t j = 0; j < f.size(); ++j) {
            v += f[j] * pw;
            pw *= p_;
        }
        return Elem(v);
    };

    add_.resize(std::size_t(q_) * q_);
    mul_.resize(std::size_t(q_) * q_);
    neg_.resize(q_);
    inv_.resize(q_, 0);
    proot_.resize(q_);
    log_.assign(q_, -1);
    for (int x = 0; x < q_; ++x) {
        PPoly fx = decode(Elem(x));
        for (int y = 0; y < q_; ++y) {
            PPoly fy = decode(Elem(y));
            PPoly s(std::max(fx.size(), fy.size()), 0);
            for (std::size_t j = 0; j < s.size(); ++j) {
                int v = (j < fx.size() ? fx[j] : 0) + (j < fy.size() ? fy[j] : 0);
                s[j] = std::uint8_t(v % p_);
            }
            ptrim(s);
            add_[idx(Elem(x), Elem(y))] = encode(s);
            mul_[idx(Elem(x), Elem(y))] = encode(pmulmod(fx, fy, modulus_, p_));
        }
    }
    for (int x = 0; x < q_; ++x) {
        PPoly n = decode(Elem(x));
        for (auto& c : n) c = std::uint8_t((p_ - c) % p_);
        ptrim(n);
        neg_[x] = encode(n);
    }
    for (int x = 1; x < q_; ++x)
        for (int y = 1; y < q_; ++y)
            if (mul(Elem(x), Elem(y)) == 1) inv_[x] = Elem(y);

    // Inverse of Frobenius: x -> x^(p^(w-1)).
    for (int x = 0; x < q_; ++x) {
        Elem r = Elem(x);
        for (int j = 0; j < w_ - 1; ++j) {
            Elem s = r;
            for (int k = 1; k < p_; ++k) s = mul(s, r);
            r = s;
        }
        proot_[x] = r;
    }

    if (w_ == 1) {
        for (int g = 1; g < q_ && generator_ == 0; ++g)
            if (mult_order(Elem(g)) == q_ - 1) generator_ = Elem(g);
    } else {
        generator_ = Elem(p_);  // the element x
        if (mult_order(generator_) != q_ - 1)
            for (int g = 1; g < q_ && mult_order(generator_) != q_ - 1; ++g)
                generator_ = Elem(g);
    }
    Elem acc = 1;
    for (int e = 0; e < q_ - 1; ++e) {
        log_[acc] = e;
        acc = mul(acc, generator_);
    }
}

const Field& Field::get(int p, int w) {
    static std::mutex mu;
    static std::map<std::pair<int, int>, const Field*> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(p, w);
    auto it = cache.find(key);
    if (it != cache.end()) return *it->second;
    for (int d = 2; d * d <= p; ++d)
        if (p % d == 0) throw Error("characteristic is not prime");
    if (p < 2) throw Error("characteristic is not prime");
    const Field* f = new Field(p, w);
    cache.emplace(key, f);
    return *f;
}

const Field& Field::parse(std::string_view s) {
    auto caret = s.find('^');
    try {
        if (caret == std::string_view::npos) {
            int q = std::stoi(std::string(s));
            // Accept prime powers written flat ("4", "9") as well.
            for (int p = 2; p <= q; ++p) {
                bool prime = p >= 2;
                for (int d = 2; d * d <= p; ++d)
                    if (p % d == 0) prime = false;
                if (!prime) continue;
                int w = 0;
                long long v = q;
                while (v % p == 0) {
                    v /= p;
                    ++w;
                }
                if (v == 1 && w >= 1) return get(p, w);
            }
            throw Error("not a prime power: " + std::string(s));
        }
        int p = std::stoi(std::string(s.substr(0, caret)));
        int w = std::stoi(std::string(s.substr(caret + 1)));
        return get(p, w);
    } catch (const std::invalid_argument&) {
        throw BadToken(std::string(s));
    }
}

Elem Field::pow(Elem x, long long e) const {
    if (e < 0) {
        x = inv(x);
        e = -e;
    }
    Elem r = 1;
    while (e > 0) {
        if (e & 1) r = mul(r, x);
        x = mul(x, x);
        e >>= 1;
    }
    return r;
}

int Field::mult_order(Elem x) const {
    if (x == 0) throw ZeroElement();
    Elem acc = x;
    int z = 1;
    while (acc != 1) {
        acc = mul(acc, x);
        ++z;
    }
    return z;
}

Elem Field::from_int(long long v) const {
    long long r = ((v % p_) + p_) % p_;
    return Elem(r);
}

std::vector<std::uint8_t> Field::repr(Elem x) const {
    std::vector<std::uint8_t> r(w_, 0);
    int t = x;
    for (int j = 0; j < w_; ++j) {
        r[j] = std::uint8_t(t % p_);
        t /= p_;
    }
    return r;
}

std::string Field::format(Elem x) const {
    if (w_ == 1) {
        if (x < 10) return std::string(1, char('0' + x));
        if (x <= 16) return std::string(1, char('A' + x - 10));
        return std::to_string(int(x));
    }
    if (x == 0) return "0";
    if (x == 1) return "1";
    int e = log_[x];
    if (e == 1) return "a";
    return "a^" + std::to_string(e);
}

Elem Field::parse_elem(std::string_view text) const {
    if (text.empty()) throw BadToken("");
    if (w_ == 1) {
        if (text.size() == 1) {
            char c = text[0];
            int v = -1;
            if (c >= '0' && c <= '9') v = c - '0';
            else if (c >= 'A' && c <= 'G') v = 10 + (c - 'A');
            else if (c >= 'a' && c <= 'g' && c != 'a') v = 10 + (c - 'a');
            if (v < 0 || v >= q_) throw BadToken(std::string(text));
            return Elem(v);
        }
        try {
            int v = std::stoi(std::string(text));
            if (v < 0 || v >= q_) throw BadToken(std::string(text));
            return Elem(v);
        } catch (const std::invalid_argument&) {
            throw BadToken(std::string(text));
        }
    }
    if (text == "0") return 0;
    if (text == "1") return 1;
    if (text == "a" || text == "alpha") return generator_;
    auto caret = text.find('^');
    if (caret != std::string_view::npos &&
        (text.substr(0, caret) == "a" || text.substr(0, caret) == "alpha")) {
        try {
            long long e = std::stoll(std::string(text.substr(caret + 1)));
            return pow(generator_, e);
        } catch (const std::invalid_argument&) {
            throw BadToken(std::string(text));
        }
    }
    // Fall back to the integer index.
    try {
        int v = std::stoi(std::string(text));
        if (v < 0 || v >= q_) throw BadToken(std::string(text));
        return Elem(v);
    } catch (const std::invalid_argument&) {
        throw BadToken(std::string(text));
    }
}

std::string Field::descriptor() const {
    if (w_ == 1) return std::to_string(p_);
    return std::to_string(p_) + "^" + std::to_string(w_);
}

}  // namespace polytri
