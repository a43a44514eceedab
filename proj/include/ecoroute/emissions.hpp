#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ecoroute {

// Operating-mode bin over half-open intervals [vsp_lo, vsp_hi) x [v_lo, v_hi).
struct OpModeBin {
    int bin_id = 0;
    double vsp_lo = 0.0, vsp_hi = 0.0; // kW/tonne
    double v_lo = 0.0, v_hi = 0.0;     // m/s
    double ghg_gps = 0.0;              // CO2eq g/s
    double nox_gps = 0.0;              // g/s

    bool contains(double vsp_value, double v) const {
        return vsp_value >= vsp_lo && vsp_value < vsp_hi && v >= v_lo && v < v_hi;
    }
};

struct EmissionRates {
    double ghg_gps = 0.0;
    double nox_gps = 0.0;
};

// Below this speed a vehicle is idling.
inline constexpr double kIdleSpeed = 0.5;

// Light-duty vehicle specific power, kW/tonne.
inline double vsp(double v, double a, double grade = 0.0) {
    return v * (1.1 * a + 9.81 * grade + 0.132) + 0.000302 * v * v * v;
}

class OpModeTable {
  public:
    OpModeTable() = default;
    // Validates rates and the idle-bin requirement; throws ValidationError.
    explicit OpModeTable(std::vector<OpModeBin> bins);

    // The default 23-bin surrogate table (same content as data/opmode_default.csv).
    static OpModeTable default_table();

    const std::vector<OpModeBin> &bins() const { return bins_; }

    // Index of the bin holding (vsp, v); throws ValidationError if none does.
    std::size_t find_bin(double vsp_value, double v) const;

    EmissionRates rates(double v, double a) const;

    double min_ghg() const;
    double max_ghg() const;

  private:
    std::vector<OpModeBin> bins_;
};

inline EmissionRates emission_rates(double v, double a, const OpModeTable &table) {
    return table.rates(v, a);
}

OpModeTable load_opmode_table(const std::string &path);
OpModeTable read_opmode_table(std::istream &in, const std::string &source_name = "<opmode>");
void write_opmode_table(std::ostream &out, const OpModeTable &table);

} // namespace ecoroute
