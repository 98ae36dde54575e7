#pragma once

// Phase-free Pauli operators in the symplectic representation and stabilizer
// groups kept in reduced row-echelon form.

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "hypfloquet/bits.hpp"

namespace hypfloquet {

/// Pauli on n qubits up to phase: qubit i carries X if x_i, Z if z_i, Y if both.
class PauliOperator {
   public:
    PauliOperator() = default;
    explicit PauliOperator(size_t n) : x_(n), z_(n) {
    }

    /// Parses "XIZY" style strings ('_' is accepted for identity).
    static PauliOperator from_string(const std::string &text) {
        PauliOperator p(text.size());
        for (size_t i = 0; i < text.size(); i++) {
            p.set(i, text[i]);
        }
        return p;
    }

    /// Two-qubit check of the given type ('X', 'Y' or 'Z') on qubits u and v.
    static PauliOperator two_body(size_t n, char type, size_t u, size_t v) {
        PauliOperator p(n);
        p.set(u, type);
        p.set(v, type);
        return p;
    }

    size_t num_qubits() const noexcept {
        return x_.size();
    }
    const Bits &x() const noexcept {
        return x_;
    }
    const Bits &z() const noexcept {
        return z_;
    }
    Bits &x() noexcept {
        return x_;
    }
    Bits &z() noexcept {
        return z_;
    }

    char get(size_t q) const noexcept {
        bool xb = x_.get(q);
        bool zb = z_.get(q);
        return xb ? (zb ? 'Y' : 'X') : (zb ? 'Z' : 'I');
    }
    void set(size_t q, char type) {
        switch (type) {
            case 'I':
            case '_':
                x_.set(q, false);
                z_.set(q, false);
                break;
            case 'X':
                x_.set(q, true);
                z_.set(q, false);
                break;
            case 'Y':
                x_.set(q, true);
                z_.set(q, true);
                break;
            case 'Z':
                x_.set(q, false);
                z_.set(q, true);
                break;
            default:
                throw std::invalid_argument(std::string("unknown Pauli '") + type + "'");
        }
    }

    /// Bit c of the 2n-bit symplectic vector (x bits first, then z bits).
    bool bit(size_t c) const noexcept {
        size_t n = num_qubits();
        return c < n ? x_.get(c) : z_.get(c - n);
    }

    size_t weight() const noexcept {
        return (x_ | z_).popcount();
    }
    Bits support() const {
        return x_ | z_;
    }
    bool is_identity() const noexcept {
        return !x_.any() && !z_.any();
    }

    bool commutes(const PauliOperator &other) const noexcept {
        size_t parity = 0;
        for (size_t k = 0; k < x_.num_words(); k++) {
            parity += std::popcount((x_.word(k) & other.z_.word(k)) ^ (z_.word(k) & other.x_.word(k)));
        }
        return parity % 2 == 0;
    }

    PauliOperator &operator*=(const PauliOperator &other) noexcept {
        x_ ^= other.x_;
        z_ ^= other.z_;
        return *this;
    }
    friend PauliOperator operator*(PauliOperator a, const PauliOperator &b) noexcept {
        return a *= b;
    }

    std::string str() const {
        std::string out(num_qubits(), 'I');
        for (size_t q = 0; q < num_qubits(); q++) {
            out[q] = get(q);
        }
        return out;
    }

    friend bool operator==(const PauliOperator &, const PauliOperator &) = default;
    friend auto operator<=>(const PauliOperator &a, const PauliOperator &b) = default;

   private:
    Bits x_;
    Bits z_;
};

/// Abelian group of Paulis (phases dropped), stored as RREF rows over the
/// 2n-bit symplectic vector. Two groups are equal iff their RREF rows are.
class StabilizerGroup {
   public:
    StabilizerGroup() = default;
    explicit StabilizerGroup(size_t n) : n_(n) {
    }

    size_t num_qubits() const noexcept {
        return n_;
    }
    size_t rank() const noexcept {
        return rows_.size();
    }
    const std::vector<PauliOperator> &generators() const noexcept {
        return rows_;
    }

    /// Reduces p against the rows; the result is zero iff p is in the group.
    PauliOperator reduce(PauliOperator p) const {
        for (size_t i = 0; i < rows_.size(); i++) {
            if (p.bit(pivots_[i])) {
                p *= rows_[i];
            }
        }
        return p;
    }
    bool contains(const PauliOperator &p) const {
        return reduce(p).is_identity();
    }

    bool commutes_with(const PauliOperator &p) const {
        for (const auto &r : rows_) {
            if (!r.commutes(p)) {
                return false;
            }
        }
        return true;
    }

    bool is_abelian() const {
        for (size_t i = 0; i < rows_.size(); i++) {
            for (size_t j = i + 1; j < rows_.size(); j++) {
                if (!rows_[i].commutes(rows_[j])) {
                    return false;
                }
            }
        }
        return true;
    }

    /// Adds p to the generating set without any commutation check. Used to
    /// build groups directly (face stabilizers, test fixtures).
    void add(const PauliOperator &p) {
        check_size(p);
        if (!contains(p)) {
            rows_.push_back(p);
            rebuild();
        }
    }

    /// Projective measurement of `check`. If it commutes with the group it is
    /// added (when independent). Otherwise the first anticommuting row g is
    /// multiplied into the other anticommuting rows and then replaced by the check.
    void measure(const PauliOperator &check) {
        check_size(check);
        int first = -1;
        for (size_t i = 0; i < rows_.size(); i++) {
            if (!rows_[i].commutes(check)) {
                if (first < 0) {
                    first = static_cast<int>(i);
                } else {
                    rows_[i] *= rows_[first];
                }
            }
        }
        if (first < 0) {
            if (contains(check)) {
                return;
            }
            rows_.push_back(check);
        } else {
            rows_[first] = check;
        }
        rebuild();
    }

    friend bool operator==(const StabilizerGroup &a, const StabilizerGroup &b) {
        return a.n_ == b.n_ && a.rows_ == b.rows_;
    }

    /// Rows as a JSON bit matrix: {"n": n, "x": [[0/1...]...], "z": [...]}.
    nlohmann::json to_json() const {
        nlohmann::json out;
        out["n"] = n_;
        auto xs = nlohmann::json::array();
        auto zs = nlohmann::json::array();
        for (const auto &r : rows_) {
            std::vector<int> xr(n_), zr(n_);
            for (size_t q = 0; q < n_; q++) {
                xr[q] = r.x().get(q);
                zr[q] = r.z().get(q);
            }
            xs.push_back(xr);
            zs.push_back(zr);
        }
        out["x"] = xs;
        out["z"] = zs;
        return out;
    }

   private:
    void check_size(const PauliOperator &p) const {
        if (p.num_qubits() != n_) {
            throw std::invalid_argument("Pauli on " + std::to_string(p.num_qubits()) + " qubits used with a " +
                                        std::to_string(n_) + "-qubit group");
        }
    }

    // Full Gauss-Jordan elimination over the current rows.
    void rebuild() {
        std::vector<PauliOperator> rows = std::move(rows_);
        rows_.clear();
        pivots_.clear();
        size_t r = 0;
        for (size_t c = 0; c < 2 * n_ && r < rows.size(); c++) {
            size_t pick = r;
            while (pick < rows.size() && !rows[pick].bit(c)) {
                pick++;
            }
            if (pick == rows.size()) {
                continue;
            }
            std::swap(rows[r], rows[pick]);
            for (size_t i = 0; i < rows.size(); i++) {
                if (i != r && rows[i].bit(c)) {
                    rows[i] *= rows[r];
                }
            }
            pivots_.push_back(c);
            r++;
        }
        rows.resize(r);
        rows_ = std::move(rows);
    }

    size_t n_ = 0;
    std::vector<PauliOperator> rows_;
    std::vector<size_t> pivots_;
};

}  // namespace hypfloquet
