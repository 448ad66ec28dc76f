#pragma once

#include <filesystem>
#include <fstream>
#include <memory>
#include <random>
#include <sstream>
#include <string>

#include <spdlog/sinks/ostream_sink.h>
#include <spdlog/spdlog.h>

#include "svo/composer.hpp"
#include "svo/counts.hpp"
#include "svo/diagnostics.hpp"
#include "svo/embeddings.hpp"
#include "svo/vocabulary.hpp"

namespace svo::testing {

// Subject: (dog,chase)x2 (cat,chase)x1 (dog,eat)x1.
// Object:  (cat,chase)x2 (dog,eat)x1 (dog,chase)x1.
inline PairCountTable toy_counts() {
  PairCountTable t;
  t.add(Role::Subject, "dog", "chase", 2);
  t.add(Role::Subject, "cat", "chase", 1);
  t.add(Role::Subject, "dog", "eat", 1);
  t.add(Role::Object, "cat", "chase", 2);
  t.add(Role::Object, "dog", "eat", 1);
  t.add(Role::Object, "dog", "chase", 1);
  return t;
}

inline Vocabulary toy_vocabulary() { return Vocabulary({"cat", "dog"}, {"chase", "eat"}); }

// dog=(1,0) cat=(0.6,0.8) chase=(0,1) eat=(0.8,0.6) bone=(0,1)
inline EmbeddingTable toy_embeddings() {
  std::istringstream in("dog 1 0\ncat 0.6 0.8\nchase 0 1\neat 0.8 0.6\nbone 0 1\n");
  return load_embeddings(in);
}

// Bundles the toy model so the composer's references stay valid.
struct ToyModel {
  PairCountTable counts = toy_counts();
  Vocabulary vocab = toy_vocabulary();
  EmbeddingTable embeddings = toy_embeddings();
  PpmiModel ppmi{counts};
  Composer composer{vocab, ppmi, embeddings};
};

// Captures diagnostics for the lifetime of the object.
class CapturedLog {
 public:
  CapturedLog() : previous_(diagnostics()) {
    auto sink = std::make_shared<spdlog::sinks::ostream_sink_mt>(stream_);
    set_diagnostics(std::make_shared<spdlog::logger>("test", sink));
  }
  ~CapturedLog() { set_diagnostics(previous_); }
  std::string text() const { return stream_.str(); }

 private:
  std::ostringstream stream_;
  std::shared_ptr<spdlog::logger> previous_;
};

class TempDir {
 public:
  TempDir() {
    std::random_device rd;
    path_ = std::filesystem::temp_directory_path() / ("svo_test_" + std::to_string(rd()));
    std::filesystem::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
  }
  std::filesystem::path operator/(const std::string& name) const { return path_ / name; }
  const std::filesystem::path& path() const { return path_; }

 private:
  std::filesystem::path path_;
};

inline void write_file(const std::filesystem::path& p, const std::string& text) {
  std::ofstream out(p, std::ios::binary);
  out << text;
}

inline std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace svo::testing
