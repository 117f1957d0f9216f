#include <algorithm>
#include <cctype>
#include <iomanip>
#include <sstream>

#include <json.hpp>

#include "leinster/search.hpp"

namespace leinster::search {

namespace {

constexpr std::array<std::pair<Family, std::string_view>, 7> kFamilyNames = {{
    {Family::cyclic, "cyclic"},
    {Family::zm, "zm"},
    {Family::affine, "affine"},
    {Family::dihedral, "dihedral"},
    {Family::gen_dihedral, "gen-dihedral"},
    {Family::dicyclic, "dicyclic"},
    {Family::pq, "pq"},
}};

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
}

// Collects one record; integer values are kept as their decimal lexeme so
// numbers beyond 64 bits survive the round trip.
class RecordSax : public nlohmann::json_sax<nlohmann::json> {
 public:
  bool null() override { return false; }
  bool boolean(bool) override { return false; }
  bool number_integer(number_integer_t) override { return false; }
  bool number_unsigned(number_unsigned_t v) override { return scalar_number(std::to_string(v)); }
  bool number_float(number_float_t, const string_t& lexeme) override {
    return all_digits(lexeme) && scalar_number(lexeme);
  }
  bool string(string_t& s) override {
    if (depth_ == 2 && key_ == "notes") {
      notes_.push_back(s);
      return true;
    }
    if (depth_ != 1) return false;
    if (key_ == "family") family_ = s;
    else if (key_ == "class") kind_ = s;
    else return false;
    return true;
  }
  bool binary(binary_t&) override { return false; }
  bool start_object(std::size_t) override { return depth_++ == 0; }
  bool key(string_t& k) override {
    key_ = k;
    seen_.push_back(k);
    return true;
  }
  bool end_object() override {
    --depth_;
    return true;
  }
  bool start_array(std::size_t) override {
    if (depth_ != 1 || (key_ != "params" && key_ != "notes")) return false;
    ++depth_;
    return true;
  }
  bool end_array() override {
    --depth_;
    return true;
  }
  bool parse_error(std::size_t, const std::string&, const nlohmann::detail::exception&) override { return false; }

  std::optional<SearchRecord> finish() const {
    for (const char* required : {"family", "params", "order", "D", "class", "notes"}) {
      if (std::count(seen_.begin(), seen_.end(), required) != 1) return std::nullopt;
    }
    if (seen_.size() != 6 || !order_ || !d_) return std::nullopt;
    const auto fam = parse_family(family_);
    const auto kind = families::parse_group_kind(kind_);
    if (!fam || !kind || to_string(*kind) != kind_) return std::nullopt;
    SearchRecord r;
    r.family = *fam;
    r.params = params_;
    r.order = *order_;
    r.divisor_sum = *d_;
    r.kind = *kind;
    r.notes = notes_;
    return r;
  }

 private:
  bool scalar_number(const std::string& text) {
    const Natural v = Natural::parse(text);
    if (depth_ == 2 && key_ == "params") {
      params_.push_back(v);
    } else if (depth_ == 1 && key_ == "order") {
      order_ = v;
    } else if (depth_ == 1 && key_ == "D") {
      d_ = v;
    } else {
      return false;
    }
    return true;
  }

  int depth_ = 0;
  std::string key_;
  std::vector<std::string> seen_;
  std::string family_;
  std::string kind_;
  std::vector<Natural> params_;
  std::optional<Natural> order_;
  std::optional<Natural> d_;
  std::vector<std::string> notes_;
};

std::string join_params(const std::vector<Natural>& params) {
  std::string out;
  for (std::size_t i = 0; i < params.size(); ++i) {
    if (i) out += ',';
    out += params[i].str();
  }
  return out;
}

}  // namespace

std::string_view to_string(Family f) {
  for (const auto& [fam, name] : kFamilyNames) {
    if (fam == f) return name;
  }
  return "?";
}

std::optional<Family> parse_family(std::string_view text) {
  for (const auto& [fam, name] : kFamilyNames) {
    if (name == text) return fam;
  }
  return std::nullopt;
}

std::vector<std::string> sweep_parameters(Family f) {
  switch (f) {
    case Family::zm:
      return {"m", "n", "r"};
    case Family::affine:
      return {"q"};
    case Family::pq:
      return {"p", "q"};
    case Family::cyclic:
    case Family::dihedral:
    case Family::gen_dihedral:
    case Family::dicyclic:
      return {"n"};
  }
  return {};
}

bool SearchRecord::has_note(std::string_view note) const {
  return std::find(notes.begin(), notes.end(), note) != notes.end();
}

std::string to_json_line(const SearchRecord& r) {
  std::string out = R"({"family":")";
  out += to_string(r.family);
  out += R"(","params":[)";
  out += join_params(r.params);
  out += R"(],"order":)" + r.order.str();
  out += R"(,"D":)" + r.divisor_sum.str();
  out += R"(,"class":")";
  out += families::to_string(r.kind);
  out += R"(","notes":[)";
  for (std::size_t i = 0; i < r.notes.size(); ++i) {
    if (i) out += ',';
    out += nlohmann::json(r.notes[i]).dump();
  }
  out += "]}";
  return out;
}

std::optional<SearchRecord> parse_json_line(std::string_view line) {
  RecordSax sax;
  try {
    if (!nlohmann::json::sax_parse(line.begin(), line.end(), &sax)) return std::nullopt;
  } catch (const std::exception&) {
    return std::nullopt;
  }
  return sax.finish();
}

std::string render_table(std::span<const SearchRecord> records) {
  const std::vector<std::string> header = {"family", "params", "order", "D", "class", "notes"};
  std::vector<std::vector<std::string>> rows;
  rows.push_back(header);
  for (const auto& r : records) {
    std::string notes;
    for (std::size_t i = 0; i < r.notes.size(); ++i) notes += (i ? "; " : "") + r.notes[i];
    rows.push_back({std::string(to_string(r.family)), join_params(r.params), r.order.str(), r.divisor_sum.str(),
                    std::string(families::to_string(r.kind)), notes});
  }
  std::vector<std::size_t> width(header.size(), 0);
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  }
  std::ostringstream os;
  for (const auto& row : rows) {
    std::string line;
    for (std::size_t c = 0; c < row.size(); ++c) {
      line += row[c];
      if (c + 1 < row.size()) line += std::string(width[c] - row[c].size() + 2, ' ');
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    os << line << '\n';
  }
  return os.str();
}

}  // namespace leinster::search
