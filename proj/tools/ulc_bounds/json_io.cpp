#include "json_io.hpp"

#include <array>
#include <charconv>
#include <fstream>
#include <random>
#include <sstream>
#include <system_error>
#include <type_traits>

namespace ulc::cli {

using nlohmann::json;

std::string format_double(double value) {
  std::array<char, 64> buffer{};
  const auto [end, ec] = std::to_chars(buffer.data(), buffer.data() + buffer.size(), value);
  if (ec != std::errc{}) {
    throw std::runtime_error("format_double: conversion failed");
  }
  return {buffer.data(), end};
}

std::string format_optional(const std::optional<double>& value) {
  return value ? format_double(*value) : std::string{};
}

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw InputError("cannot open " + path.string());
  }
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw InputError(path.string() + ": invalid JSON: " + e.what());
  }
}

namespace {

const json& require(const json& j, const char* key, const char* context) {
  if (!j.is_object() || !j.contains(key)) {
    throw InputError(std::string(context) + ": missing field \"" + key + "\"");
  }
  return j.at(key);
}

double require_number(const json& j, const char* key, const char* context) {
  const json& v = require(j, key, context);
  if (!v.is_number()) {
    throw InputError(std::string(context) + ": field \"" + key + "\" must be a number");
  }
  return v.get<double>();
}

std::int64_t require_integer(const json& j, const char* key, const char* context) {
  const json& v = require(j, key, context);
  if (!v.is_number_integer()) {
    throw InputError(std::string(context) + ": field \"" + key + "\" must be an integer");
  }
  return v.get<std::int64_t>();
}

std::vector<double> require_numbers(const json& j, const char* key, const char* context) {
  const json& v = require(j, key, context);
  if (!v.is_array()) {
    throw InputError(std::string(context) + ": field \"" + key + "\" must be an array");
  }
  std::vector<double> out;
  out.reserve(v.size());
  for (const json& item : v) {
    if (!item.is_number()) {
      throw InputError(std::string(context) + ": field \"" + key + "\" must contain only numbers");
    }
    out.push_back(item.get<double>());
  }
  return out;
}

template <typename F>
auto rethrow_as_input_error(F&& f) {
  try {
    return f();
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
}

}  // namespace

DiscretePmf pmf_from_json(const json& j) {
  const std::int64_t offset = require_integer(j, "offset", "pmf");
  std::vector<double> masses = require_numbers(j, "masses", "pmf");
  return rethrow_as_input_error([&] { return DiscretePmf(offset, std::move(masses)); });
}

json pmf_to_json(const DiscretePmf& pmf) {
  return {{"offset", pmf.offset()}, {"masses", std::vector<double>(pmf.masses().begin(), pmf.masses().end())}};
}

ConvexBody body_from_json(const json& j) {
  if (!j.is_object() || j.size() != 1) {
    throw InputError("body: expected exactly one of \"box\", \"cube\", \"ball\"");
  }
  ConvexBody body = [&]() -> ConvexBody {
    if (j.contains("box")) {
      return Box{require_numbers(j.at("box"), "sides", "box")};
    }
    if (j.contains("cube")) {
      const json& c = j.at("cube");
      return ScaledCube{require_number(c, "r", "cube"), require_integer(c, "n", "cube")};
    }
    if (j.contains("ball")) {
      const json& b = j.at("ball");
      return Ball{require_number(b, "radius", "ball"), require_integer(b, "n", "ball")};
    }
    throw InputError("body: unknown kind \"" + j.begin().key() + "\"");
  }();
  rethrow_as_input_error([&] {
    validate(body);
    return 0;
  });
  return body;
}

json body_to_json(const ConvexBody& body) {
  return std::visit(
      [](const auto& b) -> json {
        using T = std::decay_t<decltype(b)>;
        if constexpr (std::is_same_v<T, Box>) {
          return {{"box", {{"sides", b.sides}}}};
        } else if constexpr (std::is_same_v<T, ScaledCube>) {
          return {{"cube", {{"r", b.r}, {"n", b.n}}}};
        } else {
          return {{"ball", {{"radius", b.radius}, {"n", b.n}}}};
        }
      },
      body);
}

void write_file_atomically(const std::filesystem::path& path, std::string_view contents) {
  std::random_device entropy;
  std::filesystem::path temp = path;
  temp += ".tmp-" + std::to_string(entropy());
  {
    std::ofstream out(temp, std::ios::binary | std::ios::trunc);
    if (!out) {
      throw InputError("cannot write " + temp.string());
    }
    out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
    out.flush();
    if (!out) {
      std::error_code ignored;
      std::filesystem::remove(temp, ignored);
      throw InputError("write failed for " + temp.string());
    }
  }
  std::error_code ec;
  std::filesystem::rename(temp, path, ec);
  if (ec) {
    std::error_code ignored;
    std::filesystem::remove(temp, ignored);
    throw InputError("cannot move output into place at " + path.string() + ": " + ec.message());
  }
}

}  // namespace ulc::cli
