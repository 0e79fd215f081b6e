#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "render.hpp"

namespace smtop::cli {

struct Context {
    bool json = false;
    /// "product", "min", or a path to a table file.
    std::string tnorm = "product";
    /// Rendering window for the naturals.
    std::size_t window = 10;
};

/// How a neighborhood system is obtained from a space file.
struct SystemSource {
    /// "spheres" or "r" for SM spaces; ignored for system files and g-ecarts.
    std::string from = "spheres";
    /// Largest natural coordinate of f for g-ecart systems.
    std::uint64_t cap = 10;
};

Output validate(const Context& ctx, const std::string& path);
Output sphere(const Context& ctx, const std::string& path, const std::string& p, const std::string& u,
              const std::string& v);
Output entourage(const Context& ctx, const std::string& path, const std::string& u, const std::string& v);
Output ecart_sphere(const Context& ctx, const std::string& path, const std::string& p, const std::string& f);
Output r_sphere(const Context& ctx, const std::string& path, const std::string& p, const std::string& r,
                const std::string& u);
Output family(const Context& ctx, const std::string& path, const std::optional<std::string>& p,
              const SystemSource& src);
Output classify(const Context& ctx, const std::string& path, const SystemSource& src);
Output closure(const Context& ctx, const std::string& path, const std::string& set, const SystemSource& src,
               bool interior);
Output symmetric(const Context& ctx, const std::string& path, const SystemSource& src);
Output product(const Context& ctx, const std::string& a, const std::string& b, const std::string& emit,
               std::uint64_t cap);
Output verify_theorems(const Context& ctx, std::size_t trials, std::uint64_t seed);
Output verify_space(const Context& ctx, const std::string& path);
Output verify_product(const Context& ctx, const std::string& a, const std::string& b, std::uint64_t cap);
Output verify_tnorm(const Context& ctx);
Output paper_examples(const Context& ctx, const std::string& fixtures, const std::vector<std::string>& groups);

} // namespace smtop::cli
