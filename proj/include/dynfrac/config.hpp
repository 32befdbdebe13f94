#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "dynfrac/growth.hpp"
#include "dynfrac/laplace.hpp"
#include "dynfrac/material.hpp"
#include "dynfrac/solver.hpp"
#include "dynfrac/weights.hpp"

namespace dynfrac {

// Flat key = value run configuration. Every knob has a default, so the
// echoed entries describe a run completely.
class RunConfig {
  public:
    RunConfig();

    // throws InputError for unknown keys or unparsable values
    void set(const std::string& key, const std::string& value);
    const std::string& get(const std::string& key) const;
    double number(const std::string& key) const;
    int integer(const std::string& key) const;
    bool flag(const std::string& key) const;
    const std::map<std::string, std::string>& entries() const { return values_; }

    Material material() const;
    CrackSetup setup() const;
    SolverOptions solver() const;
    InversionConfig inversion() const;
    GrowthOptions growth() const;
    unsigned threads() const;

    // full consistency check; throws InputError
    void validate() const;

  private:
    std::map<std::string, std::string> values_;
};

// Lines "key = value"; '#' starts a comment; blank lines ignored.
void read_config(std::istream& in, RunConfig& cfg);
void load_config(const std::string& path, RunConfig& cfg);

struct Range {
    double a = 0.0, b = 0.0, step = 0.0;
    std::vector<double> values() const { return linspace_step(a, b, step); }
};

// "A:B:STEP"
Range parse_range(const std::string& text);
SweepAxis parse_axis(const std::string& text);
const char* axis_name(SweepAxis axis);

// "t0:l0,t1:l1,..."
SpeedSchedule parse_schedule(const std::string& text);
// "x:sigma12:sigma22;..."
std::vector<PointStress> parse_points(const std::string& text);
// CSV with header x,sigma12,sigma22
StressProfile load_stress_csv(const std::string& path);

std::string format_double(double v);
void write_weight_csv(std::ostream& out, const WeightTable& table);
void write_sif_csv(std::ostream& out, const std::vector<StageResult>& stages);
void write_stage_csv(std::ostream& out, const std::vector<StageResult>& stages);
void write_radiated_csv(std::ostream& out, const StageResult& stage);

}  // namespace dynfrac
