#include "compa/generator_format.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

#include "compa/error.hpp"

namespace compa {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Permutation parse_cycles(std::string_view text, std::size_t degree) {
  std::vector<std::vector<Point>> cycles;
  std::size_t i = 0;
  auto skip_space = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_space();
  if (i == text.size()) throw InvalidArgument("empty permutation");
  while (i < text.size()) {
    if (text[i] != '(') throw InvalidArgument("expected '(' in \"" + std::string(text) + "\"");
    ++i;
    std::vector<Point> cycle;
    for (;;) {
      while (i < text.size() && (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == ',')) ++i;
      if (i == text.size()) throw InvalidArgument("unterminated cycle");
      if (text[i] == ')') {
        ++i;
        break;
      }
      unsigned long value = 0;
      auto [ptr, ec] = std::from_chars(text.data() + i, text.data() + text.size(), value);
      if (ec != std::errc() || ptr == text.data() + i) {
        throw InvalidArgument("expected a point number in \"" + std::string(text) + "\"");
      }
      i = static_cast<std::size_t>(ptr - text.data());
      if (value >= degree) {
        throw InvalidArgument("point " + std::to_string(value) + " out of range for degree " +
                              std::to_string(degree));
      }
      cycle.push_back(static_cast<Point>(value));
    }
    if (cycle.size() > 1) cycles.push_back(std::move(cycle));
    skip_space();
  }
  return Permutation::from_cycles(degree, cycles);
}

GeneratorDocument parse_generator_document(std::string_view text) {
  GeneratorDocument doc;
  bool have_degree = false;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = trim(text.substr(pos, end - pos));
    pos = end + 1;
    ++line_no;
    if (line.empty() || line.front() == '#') continue;
    if (!have_degree) {
      constexpr std::string_view key = "degree:";
      if (line.substr(0, key.size()) != key) {
        throw ParseError(line_no, "expected \"degree: n\" header");
      }
      auto value = trim(line.substr(key.size()));
      std::size_t degree = 0;
      auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), degree);
      if (ec != std::errc() || ptr != value.data() + value.size() || degree == 0) {
        throw ParseError(line_no, "degree must be a positive integer");
      }
      doc.degree = degree;
      have_degree = true;
      continue;
    }
    try {
      doc.generators.push_back(parse_cycles(line, doc.degree));
    } catch (const InvalidArgument& e) {
      throw ParseError(line_no, e.what());
    }
  }
  if (!have_degree) throw ParseError(0, "missing \"degree: n\" header");
  return doc;
}

GeneratorDocument read_generator_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_generator_document(buffer.str());
}

std::string format_generator_document(std::size_t degree,
                                      const std::vector<Permutation>& generators) {
  std::string out = "degree: " + std::to_string(degree) + "\n";
  for (const auto& g : generators) {
    out += g.to_cycle_string();
    out += '\n';
  }
  return out;
}

}  // namespace compa
