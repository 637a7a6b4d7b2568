#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <numeric>
#include <sstream>

#include <json.hpp>

#include "ccmo/harness.hpp"

namespace ccmo {
namespace {

std::string header_line(MatrixResult const& r)
{
    std::string h = "problem,dim,objectives,grouper,hybrid,seed,fes_decomp,fes_opt,hv,igd,wallclock_ms,archive_size,"
                    "fully_separable";
    if (!r.hv_exact) { h += ",hv_stderr"; }
    return h + "\n";
}

char const* flag(bool b) { return b ? "true" : "false"; }

std::vector<MethodSpec> methods_in_order(MatrixResult const& r)
{
    std::vector<MethodSpec> out;
    for (auto const& row : r.rows) {
        if (std::find(out.begin(), out.end(), row.method) == out.end()) { out.push_back(row.method); }
    }
    return out;
}

void write_file(std::filesystem::path const& path, std::string const& text)
{
    std::ofstream out(path, std::ios::binary);
    if (!out) { throw std::runtime_error(path.string() + ": cannot write"); }
    out << text;
    if (!out) { throw std::runtime_error(path.string() + ": write failed"); }
}

std::vector<std::string> split(std::string const& line)
{
    std::vector<std::string> out;
    std::string cell;
    std::istringstream in(line);
    while (std::getline(in, cell, ',')) { out.push_back(cell); }
    if (!line.empty() && line.back() == ',') { out.emplace_back(); }
    return out;
}

double parse_double(std::string const& s, std::string const& where)
{
    double v = 0.0;
    auto const* first = s.data();
    auto const* last = s.data() + s.size();
    while (first < last && *first == ' ') { ++first; }
    while (last > first && (last[-1] == ' ' || last[-1] == '\r')) { --last; }
    auto const [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc{} || ptr != last) { throw std::runtime_error(where + ": cannot read '" + s + "' as a number"); }
    return v;
}

} // namespace

std::string format_number(double v)
{
    if (std::isnan(v)) { return "nan"; }
    if (std::isinf(v)) { return v > 0 ? "inf" : "-inf"; }
    char buf[64];
    auto const [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, ptr);
}

double mean(std::vector<double> const& v)
{
    if (v.empty()) { return std::numeric_limits<double>::quiet_NaN(); }
    return std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size());
}

double median(std::vector<double> v)
{
    if (v.empty()) { return std::numeric_limits<double>::quiet_NaN(); }
    std::sort(v.begin(), v.end());
    auto const n = v.size();
    return n % 2 == 1 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

double sample_std(std::vector<double> const& v)
{
    if (v.size() < 2) { return 0.0; }
    auto const m = mean(v);
    double ss = 0.0;
    for (auto x : v) { ss += (x - m) * (x - m); }
    return std::sqrt(ss / static_cast<double>(v.size() - 1));
}

std::vector<Aggregate> aggregate(MatrixResult const& result)
{
    std::vector<Aggregate> out;
    for (auto const& method : methods_in_order(result)) {
        std::vector<double> hv;
        std::vector<double> ig;
        for (auto const& row : result.rows) {
            if (row.method == method && row.error.empty()) {
                hv.push_back(row.hv);
                ig.push_back(row.igd);
            }
        }
        Aggregate a;
        a.method = method;
        a.runs = hv.size();
        a.hv_mean = mean(hv);
        a.hv_median = median(hv);
        a.hv_std = sample_std(hv);
        a.igd_mean = mean(ig);
        a.igd_median = median(ig);
        a.igd_std = sample_std(ig);
        out.push_back(a);
    }
    return out;
}

std::string runs_csv(MatrixResult const& r)
{
    std::string out = header_line(r);
    for (auto const& row : r.rows) {
        out += r.problem + "," + std::to_string(r.dim) + "," + std::to_string(r.objectives) + "," +
               std::string(to_string(row.method.grouper)) + "," + flag(row.method.hybrid) + "," +
               std::to_string(row.seed) + "," + std::to_string(row.fes_decomp) + "," + std::to_string(row.fes_opt) +
               "," + format_number(row.hv) + "," + format_number(row.igd) + "," + std::to_string(row.wallclock_ms) +
               "," + std::to_string(row.archive_size) + "," + flag(row.fully_separable);
        if (!r.hv_exact) { out += "," + format_number(row.hv_stderr); }
        out += "\n";
    }
    return out;
}

std::string aggregate_csv(MatrixResult const& r)
{
    std::string out = "grouper,hybrid,runs,hv_mean,hv_median,hv_std,igd_mean,igd_median,igd_std\n";
    for (auto const& a : aggregate(r)) {
        out += std::string(to_string(a.method.grouper)) + "," + flag(a.method.hybrid) + "," + std::to_string(a.runs) +
               "," + format_number(a.hv_mean) + "," + format_number(a.hv_median) + "," + format_number(a.hv_std) +
               "," + format_number(a.igd_mean) + "," + format_number(a.igd_median) + "," +
               format_number(a.igd_std) + "\n";
    }
    return out;
}

std::string archive_csv(MatrixResult const& r, MethodSpec const& method)
{
    std::string out = "seed";
    for (std::size_t k = 0; k < r.objectives; ++k) { out += ",f" + std::to_string(k + 1); }
    out += "\n";
    for (auto const& row : r.rows) {
        if (!(row.method == method)) { continue; }
        for (auto const& e : row.archive) {
            out += std::to_string(row.seed);
            for (auto v : e.f) { out += "," + format_number(v); }
            out += "\n";
        }
    }
    return out;
}

void emit_reports(MatrixResult const& r, std::filesystem::path const& dir, bool dump_solutions)
{
    if (r.rows.empty()) { throw std::invalid_argument("emit_reports: no runs"); }
    std::filesystem::create_directories(dir);
    write_file(dir / "runs.csv", runs_csv(r));
    write_file(dir / "aggregate.csv", aggregate_csv(r));

    std::string errors;
    for (auto const& row : r.rows) {
        if (!row.error.empty()) { errors += row.method.label() + "," + std::to_string(row.seed) + "," + row.error + "\n"; }
    }
    if (!errors.empty()) { write_file(dir / "errors.csv", "method,seed,message\n" + errors); }

    for (auto const& method : methods_in_order(r)) {
        write_file(dir / ("archive_" + method.label() + ".csv"), archive_csv(r, method));
        if (!dump_solutions) { continue; }
        auto doc = nlohmann::json::array();
        for (auto const& row : r.rows) {
            if (!(row.method == method)) { continue; }
            for (auto const& e : row.archive) { doc.push_back({{"seed", row.seed}, {"x", e.x}, {"f", e.f}}); }
        }
        write_file(dir / ("solutions_" + method.label() + ".json"), doc.dump() + "\n");
    }
}

std::string grouping_json(std::string const& problem, DecompositionResult const& result)
{
    nlohmann::json doc;
    doc["problem"] = problem;
    doc["dim"] = result.grouping.dim();
    doc["groups"] = result.grouping.groups();
    doc["fes"] = result.fes_consumed;
    doc["fully_separable"] = result.detected_fully_separable;
    return doc.dump() + "\n";
}

std::vector<std::pair<std::uint64_t, Front>> read_archive_csv(std::filesystem::path const& path)
{
    std::ifstream in(path);
    if (!in) { throw std::runtime_error(path.string() + ": cannot open"); }
    std::string line;
    if (!std::getline(in, line)) { throw std::runtime_error(path.string() + ": empty file"); }
    auto const header = split(line);
    bool const seeded = !header.empty() && header.front() == "seed";
    auto const columns = header.size();
    if (columns < (seeded ? 2u : 1u)) { throw std::runtime_error(path.string() + ": no objective columns"); }

    std::map<std::uint64_t, Front> fronts;
    std::vector<std::uint64_t> order;
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line == "\r") { continue; }
        auto const cells = split(line);
        auto const where = path.string() + ":" + std::to_string(line_no);
        if (cells.size() != columns) { throw std::runtime_error(where + ": expected " + std::to_string(columns) + " columns"); }
        std::uint64_t seed = 0;
        std::size_t first = 0;
        if (seeded) {
            seed = static_cast<std::uint64_t>(parse_double(cells[0], where));
            first = 1;
        }
        ObjectiveVector f;
        for (auto c = first; c < cells.size(); ++c) { f.push_back(parse_double(cells[c], where)); }
        if (!fronts.contains(seed)) { order.push_back(seed); }
        fronts[seed].push_back(std::move(f));
    }
    std::vector<std::pair<std::uint64_t, Front>> out;
    for (auto s : order) { out.emplace_back(s, std::move(fronts[s])); }
    return out;
}

} // namespace ccmo
