#include "esp/cli.hpp"

#include "esp/enumeration.hpp"
#include "esp/errors.hpp"
#include "esp/reconstruction.hpp"
#include "esp/report_json.hpp"
#include "esp/sumset.hpp"
#include "esp/text_format.hpp"
#include "esp/verifier.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <ostream>
#include <thread>

namespace esp::cli {

namespace {

enum class OutputFormat { text, json };

struct CliConfig {
  unsigned workers = std::max(1u, std::thread::hardware_concurrency());
  MemoryMode memory_mode = MemoryMode::in_memory;
  OutputFormat output = OutputFormat::text;
  std::uint64_t seed = 0;
};

std::pair<IntMultiset, IntMultiset> parse_pair(const std::string& text) {
  const auto bar = text.find('|');
  if (bar == std::string::npos || text.find('|', bar + 1) != std::string::npos)
    throw ParseError("pair must be FIRST|SECOND, got '" + text + "'");
  return {parse_int_multiset(std::string_view(text).substr(0, bar)),
          parse_int_multiset(std::string_view(text).substr(bar + 1))};
}

void print_collision_line(std::ostream& out, const CollisionPair& c) {
  out << to_text(c.first()) << ' ' << to_text(c.second()) << ' ' << to_text(c.shared_image()) << '\n';
}

}  // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Elementary symmetric partitions: compute, invert and verify pre2", "esp"};
  app.fallthrough();
  app.require_subcommand(1);

  CliConfig config;
  std::string memory_mode = "in_memory";
  std::string output = "text";
  app.add_option("--workers", config.workers, "Worker threads for verify")->check(CLI::PositiveNumber);
  app.add_option("--memory-mode", memory_mode, "in_memory or sort_merge")
      ->check(CLI::IsMember({"in_memory", "sort_merge", "in-memory", "sort-merge"}));
  app.add_option("--output", output, "text or json")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--seed", config.seed, "Seed for sampled modes");

  auto* pre = app.add_subcommand("pre", "Print pre_k of a partition");
  unsigned k = 2;
  std::string partition_text;
  pre->add_option("--k", k, "Subset size")->required()->check(CLI::PositiveNumber);
  pre->add_option("partition", partition_text, "Partition, e.g. 4,2,1,1")->required();

  auto* invert = app.add_subcommand("invert", "Recover the partition of n with a given pre2 image");
  std::uint64_t n = 0;
  std::string multiset_text;
  invert->add_option("--n", n, "Partition size")->required()->check(CLI::PositiveNumber);
  invert->add_option("multiset", multiset_text, "Image, e.g. 8^1+4^2+2^2+1^1")->required();

  auto* verify = app.add_subcommand("verify", "Exhaustively check injectivity of pre2 on partitions of n");
  bool with_roundtrip = false;
  std::uint64_t budget_mb = 2048;
  verify->add_option("--n", n, "Partition size")->required()->check(CLI::PositiveNumber);
  verify->add_flag("--roundtrip", with_roundtrip, "Also invert every image");
  verify->add_option("--memory-budget-mb", budget_mb, "in_memory budget in MiB");

  auto* roundtrip = app.add_subcommand("roundtrip", "Invert pre2 of partitions of n and compare");
  std::uint64_t sample_count = 0;
  roundtrip->add_option("--n", n, "Partition size")->required()->check(CLI::PositiveNumber);
  roundtrip->add_option("--sample", sample_count, "Check COUNT seeded random partitions")
      ->check(CLI::PositiveNumber);

  auto* cross = app.add_subcommand("cross-collide", "Find equal pre2 images across sizes");
  std::size_t length = 0;
  std::uint64_t max_part = 0;
  cross->add_option("--length", length, "Number of parts")->required()->check(CLI::Range(2, 64));
  cross->add_option("--max-part", max_part, "Largest allowed part")->required()->check(CLI::PositiveNumber);

  auto* sums = app.add_subcommand("sums", "Pairwise-sum analogue");
  sums->require_subcommand(1);
  auto* sums_search = sums->add_subcommand("search", "Find multisets with equal pairwise sums");
  std::int64_t max_abs = 0;
  sums_search->add_option("--length", length, "Multiset size")->required()->check(CLI::Range(2, 8));
  sums_search->add_option("--max-abs", max_abs, "Largest element")->required()->check(CLI::PositiveNumber);
  auto* sums_lift = sums->add_subcommand("lift", "Exponentiate a pairwise-sum collision");
  std::uint64_t base = 2;
  std::string pair_text;
  sums_lift->add_option("--base", base, "Base, at least 2")->check(CLI::Range(std::uint64_t{2}, UINT64_MAX));
  sums_lift->add_option("pair", pair_text, "FIRST|SECOND in multiset text form")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }
  config.memory_mode = parse_memory_mode(memory_mode);
  config.output = output == "json" ? OutputFormat::json : OutputFormat::text;
  const bool json = config.output == OutputFormat::json;

  try {
    if (*pre) {
      const auto lambda = parse_partition(partition_text);
      const auto image = pre_k(lambda, k);
      if (json) {
        out << nlohmann::ordered_json{{"partition", to_text(lambda)}, {"k", k}, {"image", to_text(image)}}.dump()
            << '\n';
      } else {
        out << to_text(image) << '\n';
      }
      return kExitOk;
    }

    if (*invert) {
      const auto image = parse_product_multiset(multiset_text);
      const auto lambda = invert_pre2(image, n);
      if (json) {
        out << nlohmann::ordered_json{{"n", n}, {"image", to_text(image)}, {"partition", to_text(lambda)}}.dump()
            << '\n';
      } else {
        out << to_text(lambda) << '\n';
      }
      return kExitOk;
    }

    if (*verify) {
      VerifyConfig vc;
      vc.workers = config.workers;
      vc.memory_mode = config.memory_mode;
      vc.memory_budget_bytes = budget_mb << 20;
      vc.check_roundtrip = with_roundtrip;
      const auto report = verify_injectivity(n, vc);
      if (json) {
        out << to_json(report).dump() << '\n';
      } else {
        out << "n=" << report.n << " partitions_checked=" << report.partitions_checked
            << " distinct_images=" << report.distinct_images << " collisions=" << report.collisions.size()
            << " roundtrip_failures=" << report.roundtrip_failures.size()
            << " wall_time_ms=" << report.wall_time.count() << " workers=" << report.workers << '\n';
        for (const auto& c : report.collisions) {
          out << "collision ";
          print_collision_line(out, c);
        }
        for (const auto& f : report.roundtrip_failures) out << "roundtrip_failure " << to_text(f) << '\n';
      }
      return report.clean() ? kExitOk : kExitViolation;
    }

    if (*roundtrip) {
      const bool sampled = roundtrip->count("--sample") > 0;
      const Sample sample = sampled ? Sample{SampleRandom{sample_count, config.seed}} : Sample{SampleAll{}};
      const auto failures = roundtrip_check(n, sample);
      const BigInt total = count_partitions(n);
      const std::string checked =
          sampled && to_big(sample_count) < total ? std::to_string(sample_count) : total.get_str();
      if (json) {
        auto list = nlohmann::ordered_json::array();
        for (const auto& f : failures) list.push_back(to_text(f));
        out << nlohmann::ordered_json{{"n", n}, {"checked", std::stoull(checked)}, {"failures", list}}.dump()
            << '\n';
      } else {
        out << "n=" << n << " checked=" << checked << " failures=" << failures.size() << '\n';
        for (const auto& f : failures) out << "failure " << to_text(f) << '\n';
      }
      return failures.empty() ? kExitOk : kExitViolation;
    }

    if (*cross) {
      const auto pairs = search_cross_size_collisions(length, max_part);
      const bool same_size =
          std::any_of(pairs.begin(), pairs.end(), [](const auto& c) { return c.first().size() == c.second().size(); });
      if (json) {
        auto list = nlohmann::ordered_json::array();
        for (const auto& c : pairs) list.push_back(to_json(c));
        out << nlohmann::ordered_json{{"length", length}, {"max_part", max_part}, {"collisions", list}}.dump()
            << '\n';
      } else {
        for (const auto& c : pairs) print_collision_line(out, c);
      }
      // Equal sizes would contradict injectivity on partitions of n.
      return same_size ? kExitViolation : kExitOk;
    }

    if (*sums_search) {
      const auto found = search_sum_collisions(length, max_abs);
      if (json) {
        auto list = nlohmann::ordered_json::array();
        for (const auto& c : found)
          list.push_back({{"first", to_text(c.first)}, {"second", to_text(c.second)}, {"both_sets", c.both_sets}});
        out << nlohmann::ordered_json{{"length", length}, {"max_abs", max_abs}, {"collisions", list}}.dump()
            << '\n';
      } else {
        for (const auto& c : found)
          out << to_text(c.first) << ' ' << to_text(c.second) << (c.both_sets ? " sets" : " multisets") << '\n';
      }
      return kExitOk;
    }

    if (*sums_lift) {
      const auto lifted = exp_lift(parse_pair(pair_text), base);
      if (json) {
        out << to_json(lifted).dump() << '\n';
      } else {
        print_collision_line(out, lifted);
      }
      return kExitOk;
    }
  } catch (const NoPreimage& e) {
    err << e.what() << '\n';
    return kExitUsage;
  } catch (const AmbiguousPreimage& e) {
    err << e.what() << '\n';
    return kExitViolation;
  } catch (const ResourceExhausted& e) {
    err << "ResourceExhausted: " << e.what() << '\n';
    return kExitUsage;
  } catch (const NonPositivePart& e) {
    err << "NonPositivePart: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  err << app.help();
  return kExitUsage;
}

}  // namespace esp::cli
