#ifndef LGF_TABLE_IO_HPP
#define LGF_TABLE_IO_HPP

#include <iosfwd>
#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "lgf/fft_batch.hpp"

namespace lgf {

/// Shortest decimal representation that round-trips a double.
std::string format_double(double x);

struct TableFile {
    // '# key=value' comment lines above the 'n,m,value' header
    std::map<std::string, std::string> metadata;
    std::vector<std::tuple<int, int, double>> entries;
};

void write_table_csv(std::ostream& os, const TableFile& t);
TableFile read_table_csv(std::istream& is);

void write_table_json(std::ostream& os, const TableFile& t);
TableFile read_table_json(std::istream& is);

TableFile to_table_file(const LgfTable& table, const std::string& tool_version);

}  // namespace lgf

#endif
