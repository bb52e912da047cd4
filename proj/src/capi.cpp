#include "reeder/reeder.h"

#include <cstdlib>
#include <cstring>
#include <filesystem>
#include <new>
#include <optional>
#include <sstream>
#include <string>

#include "json.hpp"

#include "reeder/error.hpp"
#include "reeder/families.hpp"
#include "reeder/moves.hpp"
#include "reeder/sigma.hpp"
#include "reeder/verify.hpp"

struct reeder_diagram {
  reeder::Diagram diagram;
  std::optional<reeder::FamilySpec> spec;
};

struct reeder_partition {
  reeder::ClassPartition partition;
};

namespace {

thread_local std::string last_error;

template <typename Fn>
reeder_status guarded(Fn&& fn) {
  try {
    last_error.clear();
    fn();
    return REEDER_OK;
  } catch (const reeder::ParseError& e) {
    last_error = e.what();
    return REEDER_ERR_PARSE;
  } catch (const reeder::ConstructionError& e) {
    last_error = e.what();
    return REEDER_ERR_PARSE;
  } catch (const reeder::ResourceError& e) {
    last_error = e.what();
    return REEDER_ERR_RESOURCE;
  } catch (const reeder::ValidationError& e) {
    last_error = e.what();
    return REEDER_ERR_INVALID;
  } catch (const reeder::PreconditionError& e) {
    last_error = e.what();
    return REEDER_ERR_INVALID;
  } catch (const reeder::IndexError& e) {
    last_error = e.what();
    return REEDER_ERR_INVALID;
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return REEDER_ERR_RESOURCE;
  } catch (const std::exception& e) {
    last_error = e.what();
    return REEDER_ERR_INTERNAL;
  } catch (...) {
    last_error = "unknown error";
    return REEDER_ERR_INTERNAL;
  }
}

void require(const void* p, const char* what) {
  if (p == nullptr) throw reeder::IndexError(std::string(what) + " must not be null");
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

int resolve_cap(int max_free) { return max_free > 0 ? max_free : reeder::kDefaultMaxFree; }

std::string representatives_report(const reeder::ClassPartition& partition, const reeder::RepresentativeSet& reps,
                                   const reeder::RepresentativeCheck& check, reeder_format format) {
  const reeder::Diagram& d = partition.diagram();
  std::ostringstream os;
  switch (format) {
    case REEDER_FORMAT_JSON: {
      nlohmann::ordered_json list = nlohmann::ordered_json::array();
      for (const auto& e : check.entries) {
        list.push_back({{"tag", e.provenance},
                        {"labeling", reeder::display_string(d, e.labeling)},
                        {"class", e.class_index},
                        {"class_min_rep", reeder::display_string(d, partition.summary(e.class_index).min_rep)},
                        {"minimal_weight", e.minimal_weight}});
      }
      const nlohmann::ordered_json doc = {{"representatives", list},
                                          {"count", reps.labelings.size()},
                                          {"class_count", partition.class_count()},
                                          {"pairwise_inequivalent", check.pairwise_inequivalent},
                                          {"complete", check.complete},
                                          {"all_ok", check.all_ok()}};
      os << doc.dump(2) << '\n';
      break;
    }
    case REEDER_FORMAT_CSV:
      os << "tag,labeling,class,class_min_rep,minimal_weight\n";
      for (const auto& e : check.entries) {
        os << e.provenance << ',' << reeder::display_string(d, e.labeling) << ',' << e.class_index << ','
           << reeder::display_string(d, partition.summary(e.class_index).min_rep) << ','
           << (e.minimal_weight ? "true" : "false") << '\n';
      }
      break;
    case REEDER_FORMAT_TEXT:
      os << "canonical representatives:\n";
      for (const auto& e : check.entries) {
        os << "  " << reeder::display_string(d, e.labeling) << "  " << e.provenance << "  -> class " << e.class_index
           << (e.minimal_weight ? "  minimal" : "  NOT minimal") << '\n';
      }
      os << (check.all_ok() ? "MATCH" : "MISMATCH") << ": " << reps.labelings.size() << " representatives, "
         << partition.class_count() << " classes"
         << (check.pairwise_inequivalent ? "" : ", some representatives share a class")
         << (check.complete ? "" : ", some classes have no representative") << '\n';
      break;
  }
  return os.str();
}

}  // namespace

extern "C" {

const char* reeder_last_error(void) { return last_error.c_str(); }

void reeder_string_free(char* s) { std::free(s); }

int reeder_default_max_free(void) { return reeder::kDefaultMaxFree; }

reeder_status reeder_diagram_from_family(const char* spec, reeder_diagram** out) {
  return guarded([&] {
    require(spec, "spec");
    require(out, "out");
    const reeder::FamilySpec fs = reeder::parse_family_spec(spec);
    *out = new reeder_diagram{reeder::construct(fs), fs};
  });
}

reeder_status reeder_diagram_from_dsl(const char* text, reeder_diagram** out) {
  return guarded([&] {
    require(text, "text");
    require(out, "out");
    *out = new reeder_diagram{reeder::parse_dsl(text).with_name("dsl"), std::nullopt};
  });
}

reeder_status reeder_diagram_load(const char* path, reeder_diagram** out) {
  return guarded([&] {
    require(path, "path");
    require(out, "out");
    *out = new reeder_diagram{reeder::load_dsl_file(path), std::nullopt};
  });
}

reeder_status reeder_diagram_open(const char* spec_or_path, reeder_diagram** out) {
  if (spec_or_path != nullptr) {
    std::error_code ec;
    if (std::filesystem::is_regular_file(spec_or_path, ec)) return reeder_diagram_load(spec_or_path, out);
  }
  return reeder_diagram_from_family(spec_or_path, out);
}

void reeder_diagram_free(reeder_diagram* d) { delete d; }

int reeder_diagram_vertex_count(const reeder_diagram* d) { return d ? d->diagram.size() : 0; }

int reeder_diagram_free_count(const reeder_diagram* d) { return d ? d->diagram.free_count() : 0; }

const char* reeder_diagram_name(const reeder_diagram* d) { return d ? d->diagram.name().c_str() : ""; }

int reeder_diagram_is_family(const reeder_diagram* d) { return d && d->spec ? 1 : 0; }

reeder_status reeder_diagram_to_dsl(const reeder_diagram* d, char** out) {
  return guarded([&] {
    require(d, "diagram");
    require(out, "out");
    *out = dup_string(reeder::to_dsl(d->diagram));
  });
}

reeder_status reeder_diagram_closed_form(const reeder_diagram* d, uint64_t* count, int* has_formula) {
  return guarded([&] {
    require(d, "diagram");
    require(count, "count");
    require(has_formula, "has_formula");
    *count = 0;
    *has_formula = 0;
    if (!d->spec) return;
    if (const auto c = reeder::closed_form_count(*d->spec)) {
      *count = *c;
      *has_formula = 1;
    }
  });
}

reeder_status reeder_apply_move(const reeder_diagram* d, const char* labeling, int vertex, char** out) {
  return guarded([&] {
    require(d, "diagram");
    require(labeling, "labeling");
    require(out, "out");
    const reeder::Diagram& dg = d->diagram;
    if (vertex < 0 || vertex >= dg.size()) throw reeder::IndexError("vertex position out of range");
    const reeder::Labeling a = reeder::from_display(dg, labeling);
    const int internal = dg.display_order()[static_cast<std::size_t>(vertex)];
    *out = dup_string(reeder::display_string(dg, reeder::apply_move(dg, a, internal)));
  });
}

reeder_status reeder_count_components(const reeder_diagram* d, const char* labeling, int* out) {
  return guarded([&] {
    require(d, "diagram");
    require(labeling, "labeling");
    require(out, "out");
    *out = reeder::count_components(d->diagram, reeder::from_display(d->diagram, labeling));
  });
}

reeder_status reeder_is_fixed(const reeder_diagram* d, const char* labeling, int* out) {
  return guarded([&] {
    require(d, "diagram");
    require(labeling, "labeling");
    require(out, "out");
    *out = reeder::is_fixed(d->diagram, reeder::from_display(d->diagram, labeling)) ? 1 : 0;
  });
}

reeder_status reeder_partition_enumerate(const reeder_diagram* d, int max_free, reeder_partition** out) {
  return guarded([&] {
    require(d, "diagram");
    require(out, "out");
    *out = new reeder_partition{reeder::enumerate_classes(d->diagram, resolve_cap(max_free))};
  });
}

void reeder_partition_free(reeder_partition* p) { delete p; }

int reeder_partition_class_count(const reeder_partition* p) { return p ? p->partition.class_count() : 0; }

reeder_status reeder_partition_class_of(const reeder_partition* p, const char* labeling, int* out) {
  return guarded([&] {
    require(p, "partition");
    require(labeling, "labeling");
    require(out, "out");
    *out = p->partition.class_of(reeder::from_display(p->partition.diagram(), labeling));
  });
}

reeder_status reeder_partition_min_rep(const reeder_partition* p, int cls, char** out) {
  return guarded([&] {
    require(p, "partition");
    require(out, "out");
    const reeder::Diagram& d = p->partition.diagram();
    *out = dup_string(reeder::display_string(d, p->partition.minimal_representative(cls)));
  });
}

reeder_status reeder_partition_class_size(const reeder_partition* p, int cls, uint64_t* out) {
  return guarded([&] {
    require(p, "partition");
    require(out, "out");
    *out = p->partition.summary(cls).size;
  });
}

reeder_status reeder_partition_export(const reeder_partition* p, reeder_format format, int include_members,
                                      char** out) {
  return guarded([&] {
    require(p, "partition");
    require(out, "out");
    const bool members = include_members != 0;
    switch (format) {
      case REEDER_FORMAT_JSON: *out = dup_string(reeder::partition_to_json(p->partition, members)); return;
      case REEDER_FORMAT_CSV: *out = dup_string(reeder::partition_to_csv(p->partition, members)); return;
      case REEDER_FORMAT_TEXT: *out = dup_string(reeder::partition_to_text(p->partition, members)); return;
    }
    throw reeder::IndexError("unknown export format");
  });
}

reeder_status reeder_check_representatives(const reeder_diagram* d, const reeder_partition* p, reeder_format format,
                                           char** report, int* available, int* all_ok) {
  return guarded([&] {
    require(d, "diagram");
    require(p, "partition");
    require(report, "report");
    require(available, "available");
    require(all_ok, "all_ok");
    *report = nullptr;
    *available = 0;
    *all_ok = 0;
    if (!d->spec) return;
    const auto reps = reeder::canonical_representatives(*d->spec);
    if (!reps) return;
    const reeder::RepresentativeCheck check = reeder::check_representatives(p->partition, *reps);
    *available = 1;
    *all_ok = check.all_ok() ? 1 : 0;
    *report = dup_string(representatives_report(p->partition, *reps, check, format));
  });
}

reeder_status reeder_verify(const reeder_diagram* d, int max_free, reeder_format format, char** report,
                            int* passed) {
  return guarded([&] {
    require(d, "diagram");
    require(report, "report");
    require(passed, "passed");
    const reeder::VerifyReport r = reeder::verify_diagram(d->diagram, d->spec, resolve_cap(max_free));
    *passed = r.all_passed() ? 1 : 0;
    *report = dup_string(format == REEDER_FORMAT_JSON ? reeder::to_json(r) : reeder::to_text(r));
  });
}

reeder_status reeder_duality(const reeder_diagram* d, int max_free, char** json, int* applicable, int* verified) {
  return guarded([&] {
    require(d, "diagram");
    require(json, "json");
    require(applicable, "applicable");
    require(verified, "verified");
    const reeder::DualityReport r = reeder::orbit_bijection_check(d->diagram, resolve_cap(max_free));
    *applicable = r.applicable ? 1 : 0;
    *verified = r.bijection_verified ? 1 : 0;
    *json = dup_string(reeder::to_json(r));
  });
}

}  // extern "C"
