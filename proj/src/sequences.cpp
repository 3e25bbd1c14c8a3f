#include "ds/sequences.hpp"

#include <fstream>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace ds {

namespace {

// numbers whose odd prime factors all lie in the allowed mod-8 classes;
// the 2-adic exponent is limited to {0,1} when single_2 is set, else even
// numbers are excluded entirely; 1 always qualifies (empty product)
std::vector<Int> prime_class_members(std::initializer_list<int> classes, bool single_2,
                                     int count) {
    std::vector<Int> out{1};
    for (i64 n = 2; (int)out.size() < count; n++) {
        i64 m = n;
        if (m % 2 == 0) {
            if (!single_2) continue;
            m /= 2;
            if (m % 2 == 0) continue;
        }
        bool ok = true;
        for (auto [p, e] : factorize(m).factors) {
            int r = (int)(p % 8);
            bool allowed = false;
            for (int c : classes) allowed = allowed || r == c;
            if (!allowed) {
                ok = false;
                break;
            }
        }
        if (ok) out.push_back(n);
    }
    return out;
}

std::vector<Int> two_is_square_mod_n(int count) {
    std::vector<Int> out;
    for (i64 n = 1; (int)out.size() < count; n++) {
        if (!sqrt_mod(2, n).empty()) out.push_back(n);
    }
    return out;
}

std::vector<Int> coprime_two_part_partitions(int count) {
    std::vector<Int> out;
    for (i64 n = 2; (int)out.size() < count; n++) {
        i64 cnt = 0;
        for (i64 a = 1; a <= n / 2; a++) {
            if (std::gcd(a, n - a) == 1) cnt++;
        }
        out.push_back(cnt);
    }
    return out;
}

std::vector<Int> half_phi_2n(int count) {
    std::vector<Int> out{1};
    for (i64 n = 2; (int)out.size() < count; n++) out.push_back(euler_phi(2 * n) / 2);
    return out;
}

std::vector<Int> pell_rec(i64 s0, i64 s1, int count) {
    std::vector<Int> out{s0, s1};
    while ((int)out.size() < count) {
        out.push_back(6 * out[out.size() - 1] - out[out.size() - 2]);
    }
    out.resize(count);
    return out;
}

std::vector<Int> coprimality_triangle(int count) {
    std::vector<Int> out;
    for (i64 n = 1; (int)out.size() < count; n++) {
        for (i64 k = 1; k <= n && (int)out.size() < count; k++) {
            out.push_back(std::gcd(n, k) == 1 ? 1 : 0);
        }
    }
    return out;
}

}  // namespace

const std::vector<SequenceInfo>& known_sequences() {
    static const std::vector<SequenceInfo> table{
        {"A058529", 1, "all prime factors congruent to +-1 mod 8"},
        {"A192453", 1, "2^e times a product of primes == 1 mod 8, e in {0,1}"},
        {"A225771", 1, "all prime factors congruent to 1 or 3 mod 8"},
        {"A057126", 1, "2 is a square mod n"},
        {"A023022", 2, "partitions of n into two coprime parts"},
        {"A055034", 1, "a(1)=1, then phi(2n)/2"},
        {"A001109", 0, "Pell-type recurrence a(n)=6a(n-1)-a(n-2), 0, 1, ..."},
        {"A001541", 0, "Pell-type recurrence a(n)=6a(n-1)-a(n-2), 1, 3, ..."},
        {"A001653", 1, "Pell-type recurrence a(n)=6a(n-1)-a(n-2), 1, 5, ..."},
        {"A054521", 1, "coprimality triangle read by rows"},
    };
    return table;
}

std::vector<Int> generate_sequence(const std::string& id, int count) {
    if (count < 1) throw std::invalid_argument("generate_sequence: count must be >= 1");
    if (id == "A058529") return prime_class_members({1, 7}, false, count);
    if (id == "A192453") return prime_class_members({1}, true, count);
    if (id == "A225771") return prime_class_members({1, 3}, false, count);
    if (id == "A057126") return two_is_square_mod_n(count);
    if (id == "A023022") return coprime_two_part_partitions(count);
    if (id == "A055034") return half_phi_2n(count);
    if (id == "A001109") return pell_rec(0, 1, count);
    if (id == "A001541") return pell_rec(1, 3, count);
    if (id == "A001653") return pell_rec(1, 5, count);
    if (id == "A054521") return coprimality_triangle(count);
    throw std::invalid_argument("generate_sequence: unknown id " + id);
}

SequenceCheck verify_sequence(const std::string& id) {
    int offset = -1;
    for (const auto& info : known_sequences()) {
        if (info.id == id) offset = info.offset;
    }
    if (offset < 0) throw std::invalid_argument("verify_sequence: unknown id " + id);

    std::string path = std::string(DS_SOURCE_DIR) + "/data/bfiles/b" + id.substr(1) + ".txt";
    std::ifstream in(path);
    if (!in) throw std::runtime_error("verify_sequence: cannot open " + path);

    std::vector<std::pair<int, Int>> snapshot;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ss(line);
        int idx;
        std::string val;
        if (ss >> idx >> val) snapshot.emplace_back(idx, Int(val));
    }
    if (snapshot.size() < 200)
        throw std::runtime_error("verify_sequence: snapshot too short for " + id);

    auto terms = generate_sequence(id, (int)snapshot.size());
    SequenceCheck chk{id, 0, -1, true};
    for (size_t i = 0; i < snapshot.size(); i++) {
        auto [idx, val] = snapshot[i];
        if (idx != offset + (int)i)
            throw std::runtime_error("verify_sequence: non-contiguous snapshot " + id);
        chk.compared++;
        if (terms[i] != val) {
            chk.ok = false;
            chk.first_mismatch = idx;
            break;
        }
    }
    return chk;
}

}  // namespace ds
