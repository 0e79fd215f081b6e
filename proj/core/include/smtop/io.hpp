#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include <nlohmann/json.hpp>

#include "smtop/distfn.hpp"
#include "smtop/ecart.hpp"
#include "smtop/gtop.hpp"
#include "smtop/product.hpp"
#include "smtop/smspace.hpp"
#include "smtop/tnorm.hpp"

namespace smtop::io {

using Json = nlohmann::ordered_json;

/// Schema version written to and accepted from files.
inline constexpr int kFormatVersion = 1;

/// Contents of a space file: an SM space (entries or metric block) or a g-ecart.
using SpaceDoc = std::variant<SMSpace, GEcart>;

/// Parses JSON text. Throws ParseError naming `origin` on malformed input.
Json parse_json(std::string_view text, const std::string& origin);
/// Reads and parses a file. Throws ParseError if it cannot be read.
Json read_json(const std::filesystem::path& path);

/// Errors carry a location such as "entries[2].fn.at". Bad literals raise
/// ParseError, wrong shapes SchemaError, broken invariants ValidationError.
DistFn fn_from_json(const Json& j);
/// `window` sets the rendering window of g-ecarts over the naturals.
SpaceDoc space_from_json(const Json& j, std::size_t window);
NeighborhoodSystem system_from_json(const Json& j);
TNorm tnorm_from_json(const Json& j);

SpaceDoc load_space(const std::filesystem::path& path, std::size_t window);
SMSpace load_sm_space(const std::filesystem::path& path);
GEcart load_ecart(const std::filesystem::path& path, std::size_t window);
NeighborhoodSystem load_system(const std::filesystem::path& path);
TNorm load_tnorm(const std::filesystem::path& path);

/// [{from, to, poly: [c0, c1, c2]}] with rationals as strings; to = null for the
/// unbounded piece.
Json to_json(const DistFn& f);
/// Entries form of a space, loadable by space_from_json.
Json to_json(const SMSpace& s);
/// Labels of a finite set, or {"all_but": [...], "window": [...]} for a cofinite one.
Json to_json(const Ground& g, const PointSet& s);
/// System file form, loadable by system_from_json when the ground is finite.
Json to_json(const NeighborhoodSystem& sys);
Json to_json(const NeighborhoodSystem& sys, const Classification& c);
Json to_json(const SMSpace& s, const SmReport& r);
Json to_json(const SMSpace& s, const MengerReport& r);
Json to_json(const TNormReport& r);
Json to_json(const FnReport& r);
Json to_json(const SMSpace& s, const PairSet& pairs);

} // namespace smtop::io
