#include "acmp/io.hpp"

#include "acmp/errors.hpp"

#include <fmt/format.h>

#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace acmp {

namespace {

std::vector<std::string> split_csv_line(const std::string& line)
{
    std::vector<std::string> cells;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) {
        while (!cell.empty() && (cell.back() == '\r' || cell.back() == ' ')) {
            cell.pop_back();
        }
        cells.push_back(cell);
    }
    return cells;
}

double parse_double(const std::string& s)
{
    try {
        size_t used = 0;
        const double v = std::stod(s, &used);
        if (used != s.size()) {
            throw ConfigError("bad number '" + s + "'");
        }
        return v;
    } catch (const std::logic_error&) {
        throw ConfigError("bad number '" + s + "'");
    }
}

} // namespace

Mask read_mask(std::istream& in)
{
    std::vector<std::string> rows;
    std::string line;
    while (std::getline(in, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t')) {
            line.pop_back();
        }
        if (line.empty()) {
            continue;
        }
        for (char c : line) {
            if (c != '0' && c != '1') {
                throw ConfigError(std::string("mask: unexpected character '") + c + "'");
            }
        }
        if (!rows.empty() && line.size() != rows.front().size()) {
            throw ConfigError("mask: rows have different lengths");
        }
        rows.push_back(line);
    }
    if (rows.empty()) {
        throw ConfigError("mask: no rows");
    }
    Mask mask;
    mask.nx = static_cast<int>(rows.front().size());
    mask.ny = static_cast<int>(rows.size());
    mask.in_set.resize(static_cast<size_t>(mask.nx * mask.ny));
    for (int j = 0; j < mask.ny; ++j) {
        for (int i = 0; i < mask.nx; ++i) {
            mask.in_set[static_cast<size_t>(i + mask.nx * j)] = rows[static_cast<size_t>(j)][static_cast<size_t>(i)] == '1';
        }
    }
    return mask;
}

Mask read_mask_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) {
        throw ConfigError("cannot open mask file " + path);
    }
    return read_mask(in);
}

void write_field_csv(const VectorField& field, std::ostream& out)
{
    const Domain& d = *field.domain;
    std::string header = d.dim() == 1 ? "i,x" : "i,j,x,y";
    for (int c = 0; c < field.m; ++c) {
        header += fmt::format(",u{}", c);
    }
    out << header << '\n';
    for (int k : d.in_set_nodes()) {
        const auto idx = d.grid_index(k);
        const Eigen::VectorXd x = d.position(k);
        std::string row = d.dim() == 1 ? fmt::format("{},{}", idx[0], x[0])
                                        : fmt::format("{},{},{},{}", idx[0], idx[1], x[0], x[1]);
        for (int c = 0; c < field.m; ++c) {
            row += fmt::format(",{}", field.values(c, k));
        }
        out << row << '\n';
    }
}

void write_field_csv_file(const VectorField& field, const std::string& path)
{
    std::ofstream out(path);
    if (!out) {
        throw ConfigError("cannot write " + path);
    }
    write_field_csv(field, out);
}

VectorField read_field_csv(std::istream& in, std::optional<double> h)
{
    std::string line;
    if (!std::getline(in, line)) {
        throw ConfigError("field csv: missing header");
    }
    const auto header = split_csv_line(line);
    int dim = 0;
    if (header.size() >= 3 && header[0] == "i" && header[1] == "x") {
        dim = 1;
    } else if (header.size() >= 5 && header[0] == "i" && header[1] == "j" && header[2] == "x" && header[3] == "y") {
        dim = 2;
    } else {
        throw ConfigError("field csv: header must start with i,x or i,j,x,y");
    }
    const int first_value = 2 * dim;
    const int m = static_cast<int>(header.size()) - first_value;

    struct Row {
        int i = 0;
        int j = 0;
        double x = 0.0;
        double y = 0.0;
        std::vector<double> u;
    };
    std::vector<Row> rows;
    int max_i = -1;
    int max_j = 0;
    while (std::getline(in, line)) {
        if (line.empty() || line == "\r") {
            continue;
        }
        const auto cells = split_csv_line(line);
        if (cells.size() != header.size()) {
            throw ConfigError("field csv: row has " + std::to_string(cells.size()) + " columns, expected "
                              + std::to_string(header.size()));
        }
        Row row;
        row.i = static_cast<int>(parse_double(cells[0]));
        row.j = dim == 2 ? static_cast<int>(parse_double(cells[1])) : 0;
        row.x = parse_double(cells[static_cast<size_t>(dim)]);
        row.y = dim == 2 ? parse_double(cells[3]) : 0.0;
        if (row.i < 0 || row.j < 0) {
            throw ConfigError("field csv: negative node index");
        }
        for (int c = 0; c < m; ++c) {
            row.u.push_back(parse_double(cells[static_cast<size_t>(first_value + c)]));
        }
        max_i = std::max(max_i, row.i);
        max_j = std::max(max_j, row.j);
        rows.push_back(std::move(row));
    }
    if (rows.empty()) {
        throw ConfigError("field csv: no rows");
    }

    double spacing = h.value_or(0.0);
    if (!h) {
        for (const auto& r : rows) {
            if (r.i != rows.front().i) {
                spacing = (r.x - rows.front().x) / (r.i - rows.front().i);
                break;
            }
        }
        if (!(spacing > 0.0)) {
            throw ConfigError("field csv: cannot infer grid spacing; pass h explicitly");
        }
    }

    Mask mask;
    mask.nx = max_i + 1;
    mask.ny = dim == 2 ? max_j + 1 : 1;
    mask.in_set.assign(static_cast<size_t>(mask.nx * mask.ny), 0);
    for (const auto& r : rows) {
        mask.in_set[static_cast<size_t>(r.i + mask.nx * r.j)] = 1;
    }
    const std::array<double, 2> origin{rows.front().x - spacing * rows.front().i,
                                       dim == 2 ? rows.front().y - spacing * rows.front().j : 0.0};
    DomainPtr domain = build_masked_domain(mask, spacing, origin);
    VectorField field(domain, m, 0.0);
    for (const auto& r : rows) {
        const int k = domain->index(r.i, r.j);
        for (int c = 0; c < m; ++c) {
            field.values(c, k) = r.u[static_cast<size_t>(c)];
        }
    }
    return field;
}

VectorField read_field_csv_file(const std::string& path, std::optional<double> h)
{
    std::ifstream in(path);
    if (!in) {
        throw ConfigError("cannot open field csv " + path);
    }
    return read_field_csv(in, h);
}

void write_history_csv(const std::vector<double>& history, std::ostream& out)
{
    out << "iteration,energy\n";
    for (size_t k = 0; k < history.size(); ++k) {
        out << fmt::format("{},{}\n", k, history[k]);
    }
}

} // namespace acmp
