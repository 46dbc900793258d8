#pragma once

#include <array>
#include <stdexcept>
#include <string>

namespace bisphere {

enum class Family { T, U };

// One of the 24 series: family T or U, moment m in {0..3}, argument
// multiplier k in {1..3} (the series argument is p = k*eta1).
struct SeriesId {
    Family family = Family::T;
    int moment = 0;
    int multiplier = 1;

    constexpr bool operator==(const SeriesId&) const = default;

    // Compact key, e.g. "T0k1", "U3k2".
    std::string key() const {
        std::string s(1, family == Family::T ? 'T' : 'U');
        s += static_cast<char>('0' + moment);
        s += 'k';
        s += static_cast<char>('0' + multiplier);
        return s;
    }

    // Display name, e.g. "T0(eta1)", "U2(3eta1)".
    std::string name() const {
        std::string s(1, family == Family::T ? 'T' : 'U');
        s += static_cast<char>('0' + moment);
        s += '(';
        if (multiplier > 1) s += static_cast<char>('0' + multiplier);
        s += "eta1)";
        return s;
    }

    int index() const {  // 0..23, T-block first
        return (family == Family::T ? 0 : 12) + 3 * moment + (multiplier - 1);
    }

    static SeriesId from_key(const std::string& key);
    static const std::array<SeriesId, 24>& all();
};

inline SeriesId SeriesId::from_key(const std::string& key) {
    if (key.size() != 4 || (key[0] != 'T' && key[0] != 'U') || key[2] != 'k')
        throw std::invalid_argument("bad series id: " + key);
    SeriesId id;
    id.family = key[0] == 'T' ? Family::T : Family::U;
    id.moment = key[1] - '0';
    id.multiplier = key[3] - '0';
    if (id.moment < 0 || id.moment > 3 || id.multiplier < 1 || id.multiplier > 3)
        throw std::invalid_argument("bad series id: " + key);
    return id;
}

inline const std::array<SeriesId, 24>& SeriesId::all() {
    static const std::array<SeriesId, 24> ids = [] {
        std::array<SeriesId, 24> a{};
        int i = 0;
        for (Family f : {Family::T, Family::U})
            for (int m = 0; m < 4; ++m)
                for (int k = 1; k <= 3; ++k) a[i++] = SeriesId{f, m, k};
        return a;
    }();
    return ids;
}

}  // namespace bisphere
