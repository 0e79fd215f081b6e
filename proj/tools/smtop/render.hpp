#pragma once

#include <string>
#include <vector>

#include <smtop/gtop.hpp>
#include <smtop/io.hpp>
#include <smtop/smspace.hpp>
#include <smtop/tnorm.hpp>

namespace smtop::cli {

/// What a command produced: text lines, the same data as JSON, and whether every
/// check in the invocation passed.
struct Output {
    io::Json json = io::Json::object();
    std::vector<std::string> lines;
    bool ok = true;

    void line(std::string text) { lines.push_back(std::move(text)); }
};

/// "{1, 2}", or "S \ {2, 3}  window: {1, 4, ...}" for cofinite sets.
std::string set_text(const Ground& g, const PointSet& s);
std::string family_text(const Ground& g, const std::vector<PointSet>& family);
std::string pass_fail(bool ok);

void render_classification(Output& out, const NeighborhoodSystem& sys, const Classification& c);
void render_sm_report(Output& out, const SMSpace& s, const SmReport& r, const std::string& prefix = "");
void render_menger(Output& out, const SMSpace& s, const MengerReport& r, const std::string& prefix = "");
void render_tnorm(Output& out, const TNormReport& r);
void render_system(Output& out, const NeighborhoodSystem& sys);

} // namespace smtop::cli
