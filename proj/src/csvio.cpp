#include "mtcc/csvio.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace mtcc {

namespace fs = std::filesystem;

std::string format_number(double v, int precision) {
  std::ostringstream os;
  os.imbue(std::locale::classic());
  os.precision(precision);
  os << v;
  return os.str();
}

namespace {

void write_atomic(const fs::path& path, const std::string& content) {
  fs::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open " + tmp.string());
    out << content;
    if (!out) {
      out.close();
      fs::remove(tmp);
      throw std::runtime_error("write failed for " + tmp.string());
    }
  }
  fs::rename(tmp, path);
}

std::string join(const std::vector<std::string>& fields) {
  std::string line;
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) line += ',';
    line += fields[i];
  }
  return line;
}

}  // namespace

void write_csv_atomic(const fs::path& path,
                      const std::vector<std::string>& header,
                      const std::vector<CsvRow>& rows) {
  std::string content = join(header);
  content += '\n';
  for (const auto& row : rows) {
    content += join(row);
    content += '\n';
  }
  write_atomic(path, content);
}

void write_manifest(const fs::path& csv_path, const std::string& command,
                    const std::string& resolved_params, std::uint64_t seed,
                    const std::vector<std::string>& outputs,
                    double duration_seconds) {
  nlohmann::json j;
  j["command"] = command;
  j["parameters"] = resolved_params;
  j["seed"] = seed;
  j["tool_version"] = kToolVersion;
  j["outputs"] = outputs;
  j["duration_seconds"] = duration_seconds;
  fs::path manifest = csv_path;
  manifest.replace_extension(".manifest.json");
  write_atomic(manifest, j.dump(2) + "\n");
}

}  // namespace mtcc
