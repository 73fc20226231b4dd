#pragma once

#include <conejac/abelian_group.hpp>
#include <conejac/integer.hpp>

#include <json.hpp>

#include <cstddef>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace conejac {

/// One computation as printed by the CLI. Absent fields are omitted from the
/// structured form; present ones always appear in declaration order.
struct Report {
  std::string input;
  std::optional<Integer> tau;
  std::optional<Integer> forest_count;
  std::optional<AbelianGroup> jacobian;
  std::optional<AbelianGroup> forest_group;
  std::optional<Integer> cone_tau;
  std::optional<AbelianGroup> cone_jacobian;
  std::optional<std::string> path;
  std::optional<bool> verified;

  friend bool operator==(const Report&, const Report&) = default;
};

/// {"torsion":[d1,...],"free_rank":r}
inline std::string group_to_json(const AbelianGroup& g) {
  std::string out = "{\"torsion\":[";
  for (std::size_t i = 0; i < g.torsion().size(); ++i) out += (i ? "," : "") + g.torsion()[i].get_str();
  return out + "],\"free_rank\":" + std::to_string(g.free_rank()) + "}";
}

/// Single-line JSON record. Integers are written as plain JSON numbers of any size.
inline std::string to_json(const Report& r) {
  std::string out = "{\"input\":" + nlohmann::json(r.input).dump();
  auto integer = [&](const char* key, const std::optional<Integer>& v) {
    if (v) out += std::string(",\"") + key + "\":" + v->get_str();
  };
  auto group = [&](const char* key, const std::optional<AbelianGroup>& g) {
    if (g) out += std::string(",\"") + key + "\":" + group_to_json(*g);
  };
  integer("tau", r.tau);
  integer("forest_count", r.forest_count);
  group("jacobian", r.jacobian);
  group("forest_group", r.forest_group);
  integer("cone_tau", r.cone_tau);
  group("cone_jacobian", r.cone_jacobian);
  if (r.path) out += ",\"path\":" + nlohmann::json(*r.path).dump();
  if (r.verified) out += std::string(",\"verified\":") + (*r.verified ? "true" : "false");
  return out + "}";
}

namespace detail {

/// SAX consumer for the fixed record shape. Works from the raw number lexemes
/// so integers wider than 64 bits survive unchanged.
class ReportSax : public nlohmann::json_sax<nlohmann::json> {
 public:
  explicit ReportSax(Report& out) : out_(out) {}

  bool null() override { return fail("null is not a valid value"); }

  bool boolean(bool v) override {
    if (depth_ != 1 || key_ != "verified") return fail("unexpected boolean");
    out_.verified = v;
    return true;
  }

  bool number_integer(number_integer_t v) override { return number(std::to_string(v)); }
  bool number_unsigned(number_unsigned_t v) override { return number(std::to_string(v)); }
  bool number_float(number_float_t, const string_t& s) override { return number(s); }

  bool string(string_t& v) override {
    if (depth_ != 1) return fail("unexpected string");
    if (key_ == "input") {
      out_.input = v;
      have_input_ = true;
    } else if (key_ == "path") {
      out_.path = v;
    } else {
      return fail("unexpected string for key '" + key_ + "'");
    }
    return true;
  }

  bool binary(binary_t&) override { return fail("unexpected binary value"); }

  bool start_object(std::size_t) override {
    ++depth_;
    if (depth_ == 1) return true;
    if (depth_ == 2 && is_group_key(key_)) {
      torsion_.clear();
      free_rank_.reset();
      return true;
    }
    return fail("unexpected object");
  }

  bool key(string_t& k) override {
    if (depth_ == 1) {
      if (!seen_.insert(k).second) return fail("duplicate key '" + k + "'");
      key_ = k;
    } else {
      inner_key_ = k;
    }
    return true;
  }

  bool end_object() override {
    if (depth_ == 2) {
      if (!free_rank_) return fail("group for '" + key_ + "' lacks free_rank");
      AbelianGroup g = AbelianGroup::from_cyclic(torsion_, *free_rank_);
      if (g.torsion() != torsion_) return fail("group for '" + key_ + "' is not in invariant-factor form");
      group_slot(key_) = g;
    }
    --depth_;
    return true;
  }

  bool start_array(std::size_t) override {
    if (depth_ == 2 && inner_key_ == "torsion" && !in_array_) {
      in_array_ = true;
      return true;
    }
    return fail("unexpected array");
  }

  bool end_array() override {
    in_array_ = false;
    return true;
  }

  bool parse_error(std::size_t position, const std::string&, const nlohmann::detail::exception& ex) override {
    error_ = "malformed JSON at byte " + std::to_string(position) + ": " + ex.what();
    return false;
  }

  void finish() const {
    if (!error_.empty()) throw std::invalid_argument("report: " + error_);
    if (!have_input_) throw std::invalid_argument("report: missing 'input'");
  }

 private:
  static bool is_group_key(const std::string& k) {
    return k == "jacobian" || k == "forest_group" || k == "cone_jacobian";
  }

  std::optional<AbelianGroup>& group_slot(const std::string& k) {
    if (k == "jacobian") return out_.jacobian;
    if (k == "forest_group") return out_.forest_group;
    return out_.cone_jacobian;
  }

  bool number(const std::string& lexeme) {
    Integer v;
    if (v.set_str(lexeme, 10) != 0) return fail("number '" + lexeme + "' is not an integer");
    if (depth_ == 1) {
      if (key_ == "tau")
        out_.tau = v;
      else if (key_ == "forest_count")
        out_.forest_count = v;
      else if (key_ == "cone_tau")
        out_.cone_tau = v;
      else
        return fail("unexpected number for key '" + key_ + "'");
      return true;
    }
    if (depth_ == 2 && in_array_) {
      torsion_.push_back(v);
      return true;
    }
    if (depth_ == 2 && inner_key_ == "free_rank" && sgn(v) >= 0 && v.fits_ulong_p()) {
      free_rank_ = v.get_ui();
      return true;
    }
    return fail("unexpected number");
  }

  bool fail(const std::string& msg) {
    if (error_.empty()) error_ = msg;
    return false;
  }

  Report& out_;
  int depth_ = 0;
  bool in_array_ = false;
  bool have_input_ = false;
  std::string key_;
  std::string inner_key_;
  std::vector<Integer> torsion_;
  std::optional<std::size_t> free_rank_;
  std::set<std::string> seen_;
  std::string error_;
};

} // namespace detail

inline Report parse_report(std::string_view text) {
  Report r;
  detail::ReportSax sax(r);
  const bool ok = nlohmann::json::sax_parse(text, &sax);
  sax.finish();
  if (!ok) throw std::invalid_argument("report: malformed record");
  return r;
}

} // namespace conejac
