#pragma once

#include <array>
#include <tuple>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "bisphere/asymptotics.hpp"
#include "bisphere/geometry.hpp"
#include "bisphere/series.hpp"

namespace bisphere {

// Expression tree over the 24 series, eta1 and elementary functions.
// Stored as data so the coefficient transcription lives in one versioned file.
struct Expr {
    enum class Op { Num, Eta, Series, Add, Sub, Mul, Div, Neg, Pow, Sinh, Cosh, Expm1 };
    Op op = Op::Num;
    double num = 0.0;
    SeriesId sid{};
    int ipow = 1;
    std::vector<Expr> args;
};

struct CoefficientRecipe {
    int id = 0;  // 1..10
    std::string note;
    Expr expr;
};

class RecipeSet {
  public:
    int version = 0;
    std::uint64_t checksum = 0;
    std::array<CoefficientRecipe, 10> coefficients{};

    // Parse from the JSON transcription file; verifies the embedded checksum.
    static RecipeSet parse(const std::string& json_text);
    static RecipeSet load_file(const std::string& path);
    // The transcription shipped with the library.
    static const RecipeSet& builtin();

    // Checksum over the canonical serialization of the coefficient trees.
    static std::uint64_t compute_checksum(const std::string& canonical);
};

// Memoizes the 24 series values per (eta1, method, rel_tol); safe for
// concurrent use.
class SeriesCache {
  public:
    double value(const SeriesId& id, double eta1, Method method,
                 const ConstantTable& constants, double rel_tol);

  private:
    using Key = std::tuple<std::uint64_t, int, std::uint64_t>;
    std::mutex mu_;
    std::map<Key, std::array<double, 24>> slots_;
};

struct ForceResult {
    double fz = 0.0;
    double fx = 0.0;
    std::array<double, 10> coefficients{};
    Method method = Method::Direct;
};

// The ten force coefficients F1..F10 at the given separation.
std::array<double, 10> eval_coefficients(const NearContactGeometry& geometry, Method method,
                                         const RecipeSet& recipes, const ConstantTable& constants,
                                         SeriesCache* cache = nullptr, double rel_tol = 1e-12);

// Nondimensional force components on sphere 2:
//   fz = beta^2 (F1 cos^2 t + F2 sin^2 t) + beta cos t (F3 a + F4)
//        + (F5 a^2 + F6 a + F7) + beta cos t
//   fx = beta^2 F8 sin 2t + beta sin t (F9 a + F10) + beta sin t
ForceResult force_components(const NearContactGeometry& geometry, const FieldConfig& field,
                             Method method, const RecipeSet& recipes,
                             const ConstantTable& constants, SeriesCache* cache = nullptr,
                             double rel_tol = 1e-12);

}  // namespace bisphere
