#include "stcurve/perm.hpp"

#include <algorithm>
#include <sstream>

namespace stcurve {

Perm::Perm(int n) {
    if (n < 1) throw std::invalid_argument("Perm: size must be >= 1");
    img_.resize(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) img_[static_cast<size_t>(i)] = i;
}

Perm::Perm(std::vector<int> images) : img_(std::move(images)) {
    const int n = size();
    if (n < 1) throw std::invalid_argument("Perm: size must be >= 1");
    std::vector<char> seen(static_cast<size_t>(n), 0);
    for (int x : img_) {
        if (x < 0 || x >= n || seen[static_cast<size_t>(x)])
            throw std::invalid_argument("Perm: images not a bijection");
        seen[static_cast<size_t>(x)] = 1;
    }
}

Perm Perm::inverse() const {
    std::vector<int> r(img_.size());
    for (int i = 0; i < size(); ++i) r[static_cast<size_t>(img_[static_cast<size_t>(i)])] = i;
    return Perm(std::move(r));
}

Perm Perm::power(int k) const {
    if (k < 0) throw std::invalid_argument("Perm::power: negative exponent");
    Perm acc(size());
    Perm base = *this;
    while (k > 0) {
        if (k & 1) acc = compose(base, acc);
        base = compose(base, base);
        k >>= 1;
    }
    return acc;
}

Perm compose(const Perm& p, const Perm& q) {
    if (p.size() != q.size())
        throw std::invalid_argument("compose: size mismatch");
    std::vector<int> r(static_cast<size_t>(p.size()));
    for (int i = 0; i < p.size(); ++i) r[static_cast<size_t>(i)] = p(q(i));
    return Perm(std::move(r));
}

std::vector<std::vector<int>> cycles(const Perm& p) {
    const int n = p.size();
    std::vector<char> seen(static_cast<size_t>(n), 0);
    std::vector<std::vector<int>> out;
    for (int i = 0; i < n; ++i) {
        if (seen[static_cast<size_t>(i)]) continue;
        std::vector<int> c;
        int j = i;
        while (!seen[static_cast<size_t>(j)]) {
            seen[static_cast<size_t>(j)] = 1;
            c.push_back(j);
            j = p(j);
        }
        out.push_back(std::move(c));
    }
    return out;
}

std::vector<int> cycle_type(const Perm& p) {
    std::vector<int> t;
    for (const auto& c : cycles(p)) t.push_back(static_cast<int>(c.size()));
    std::sort(t.begin(), t.end());
    return t;
}

Perm corner_permutation(const Perm& h, const Perm& v) {
    return compose(v, compose(h, compose(v.inverse(), h.inverse())));
}

bool transitive(const Perm& h, const Perm& v) {
    const int n = h.size();
    if (v.size() != n) return false;
    std::vector<char> seen(static_cast<size_t>(n), 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
        int i = stack.back();
        stack.pop_back();
        for (int j : {h(i), v(i)}) {
            if (!seen[static_cast<size_t>(j)]) {
                seen[static_cast<size_t>(j)] = 1;
                ++count;
                stack.push_back(j);
            }
        }
    }
    return count == n;
}

std::pair<Perm, Perm> canonical_pair(const Perm& h, const Perm& v) {
    const int n = h.size();
    if (v.size() != n) throw std::invalid_argument("canonical_pair: size mismatch");
    std::vector<int> label(static_cast<size_t>(n));
    std::vector<int> order;
    order.reserve(static_cast<size_t>(n));
    std::vector<int> best_h, best_v;
    std::vector<int> hh(static_cast<size_t>(n)), vv(static_cast<size_t>(n));
    for (int s = 0; s < n; ++s) {
        std::fill(label.begin(), label.end(), -1);
        order.clear();
        order.push_back(s);
        label[static_cast<size_t>(s)] = 0;
        int next = 1;
        for (size_t qi = 0; qi < order.size(); ++qi) {
            int i = order[qi];
            for (int j : {h(i), v(i)}) {
                if (label[static_cast<size_t>(j)] < 0) {
                    label[static_cast<size_t>(j)] = next++;
                    order.push_back(j);
                }
            }
        }
        if (next < n)
            throw std::invalid_argument("canonical_pair: disconnected surface");
        for (int i = 0; i < n; ++i) {
            hh[static_cast<size_t>(label[static_cast<size_t>(i)])] = label[static_cast<size_t>(h(i))];
            vv[static_cast<size_t>(label[static_cast<size_t>(i)])] = label[static_cast<size_t>(v(i))];
        }
        if (best_h.empty() || std::pair(hh, vv) < std::pair(best_h, best_v)) {
            best_h = hh;
            best_v = vv;
        }
    }
    return {Perm(std::move(best_h)), Perm(std::move(best_v))};
}

std::string to_string(const Perm& p) {
    std::ostringstream os;
    os << '[';
    for (int i = 0; i < p.size(); ++i) {
        if (i) os << ',';
        os << p(i);
    }
    os << ']';
    return os.str();
}

Perm perm_from_string(const std::string& s) {
    std::vector<int> img;
    int val = 0;
    bool in_num = false;
    for (char ch : s) {
        if (ch >= '0' && ch <= '9') {
            val = val * 10 + (ch - '0');
            in_num = true;
        } else {
            if (in_num) img.push_back(val);
            val = 0;
            in_num = false;
        }
    }
    if (in_num) img.push_back(val);
    return Perm(std::move(img));
}

}  // namespace stcurve
