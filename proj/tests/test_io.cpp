#include <gtest/gtest.h>

#include <filesystem>

#include <autocyc/catalog.hpp>
#include <autocyc/error.hpp>
#include <autocyc/io.hpp>

using namespace autocyc;
using autocyc::io::json;

namespace {

ErrorKind kind_of(const std::function<void()> &f)
{
  try {
    f();
  } catch (const Error &e) {
    return e.kind();
  }
  ADD_FAILURE() << "no exception";
  return ErrorKind::BadParameters;
}

std::filesystem::path temp_file(const std::string &name)
{
  return std::filesystem::temp_directory_path() / ("autocyc_io_test_" + name);
}

} // namespace

TEST(Io, GroupRoundTrip)
{
  for (auto const &key : {"g27", "a5", "z6_x_frob42", "singer(2,3)"}) {
    auto e = catalog::load(key);
    auto j = io::group_to_json(e.group());
    auto back = io::group_from_json(json::parse(j.dump()));
    EXPECT_EQ(back.hash(), e.group().hash());
    EXPECT_EQ(back.elements(), e.group().elements());
    EXPECT_EQ(back.name(), e.group().name());
    EXPECT_EQ(back.generator_names(), e.group().generator_names());
  }
}

TEST(Io, GroupFromCycles)
{
  auto j = json::parse(R"j({"name": "a5", "degree": 5, "generators": ["(1 2 3 4 5)", "(1 2 3)"]})j");
  auto G = io::group_from_json(j);
  EXPECT_EQ(G.order(), 60u);
  auto k = json::parse(R"({"name": "v4", "degree": 4, "generators": [[1,0,2,3],[0,1,3,2]]})");
  EXPECT_EQ(io::group_from_json(k).order(), 4u);

  EXPECT_EQ(kind_of([] { io::group_from_json(json::parse(R"({"degree": 3})")); }), ErrorKind::ParseError);
  EXPECT_EQ(kind_of([] { io::group_from_json(json::parse(R"({"degree": 3, "generators": [[0,0,1]]})")); }),
            ErrorKind::InvalidPermutation);
  EXPECT_EQ(kind_of([&] { io::group_from_json(j, 10); }), ErrorKind::OrderBoundExceeded);
}

TEST(Io, ActionRoundTrip)
{
  auto e = catalog::load("g27");
  auto const &G = e.group();
  for (auto const &name : e.action_names()) {
    auto A = e.action(name);
    auto back = io::action_from_json(G, json::parse(io::action_to_json(G, A).dump()));
    EXPECT_EQ(back.kind, A.kind);
    EXPECT_EQ(back.label, A.label);
    EXPECT_TRUE(build_delta(G, back).same_structure(build_delta(G, A))) << name;
  }
}

TEST(Io, ActionForms)
{
  auto e = catalog::load("a5");
  auto const &G = e.group();
  json j{{"kind", "explicit"}, {"conjugators", {"(4 5)"}}, {"group_hash", G.hash()}};
  auto A = io::action_from_json(G, j);
  ASSERT_EQ(A.generators.size(), 1u);
  EXPECT_EQ(A.generators[0], from_conjugator(G, Permutation::from_cycles(5, "(4 5)")));

  auto g = catalog::load("g27");
  json k{{"kind", "explicit"},
         {"generator_images", {{g.element("a^-1"), g.element("b")}}},
         {"label", "tau"}};
  auto T = io::action_from_json(g.group(), k);
  EXPECT_EQ(T.label, "tau");
  EXPECT_EQ(T.generators, g.action("tau").generators);

  json bad{{"kind", "inner"}, {"group_hash", "0000"}};
  EXPECT_EQ(kind_of([&] { io::action_from_json(G, bad); }), ErrorKind::HashMismatch);
  json unknown{{"kind", "sideways"}};
  EXPECT_EQ(kind_of([&] { io::action_from_json(G, unknown); }), ErrorKind::ParseError);
  json notaut{{"kind", "explicit"}, {"generator_images", {{g.element("a"), g.element("a^3")}}}};
  EXPECT_EQ(kind_of([&] { io::action_from_json(g.group(), notaut); }), ErrorKind::NotAHomomorphism);
}

TEST(Io, Files)
{
  EXPECT_EQ(kind_of([] { io::read_json_file("/nonexistent/missing.json"); }), ErrorKind::ParseError);
  auto p = temp_file("bad.json");
  io::write_text_file(p, "{not json");
  EXPECT_EQ(kind_of([&] { io::read_json_file(p); }), ErrorKind::ParseError);
  io::write_text_file(p, R"({"x": 1})");
  EXPECT_EQ(io::read_json_file(p)["x"], 1);
  std::filesystem::remove(p);
}

TEST(Io, GraphJsonIsDeterministic)
{
  auto a = catalog::load("klein4_x_extraspecial27");
  auto b = catalog::load("klein4_x_extraspecial27");
  auto Da = build_delta(a.group(), a.action("inner"));
  auto Db = build_delta(b.group(), b.action("inner"));
  EXPECT_EQ(io::graph_to_json(a.group(), Da).dump(), io::graph_to_json(b.group(), Db).dump());
  EXPECT_EQ(io::to_dot(a.group(), Da), io::to_dot(b.group(), Db));

  auto r = io::report_to_json(a.group(), Da, analyze(Da));
  EXPECT_EQ(r["report"]["diameter"], 3);
  EXPECT_EQ(r["report"]["connected"], true);
  EXPECT_EQ(r["profile"]["order"], 108);
}

TEST(Io, VerdictJson)
{
  TheoremVerdict v{"A", "z6", "trivial", false, std::nullopt, std::nullopt, "skipped"};
  auto j = io::verdict_to_json(v);
  EXPECT_TRUE(j["conclusion_holds"].is_null());
  EXPECT_TRUE(j["witness"].is_null());
  EXPECT_EQ(j["hypotheses_hold"], false);
  EXPECT_EQ(io::verdicts_to_json({v, v}).size(), 2u);
}

TEST(Io, Metadata)
{
  auto j = io::metadata_to_json(catalog::load("singer(3,2)"));
  EXPECT_EQ(j["order"], 9);
  EXPECT_TRUE(j.contains("field_polynomial"));
  auto f = io::metadata_to_json(catalog::load("frobenius(7,6)"));
  EXPECT_EQ(f["frobenius"]["kernel_size"], 7);
  EXPECT_EQ(f["frobenius"]["complement_order"], 6);
}
