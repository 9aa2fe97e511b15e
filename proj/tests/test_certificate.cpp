#include <cmath>
#include <cstdio>
#include <filesystem>

#include "doctest.h"
#include "mvmnl/partition.hpp"

using namespace mvmnl;

namespace {

const double kK4 = (5.0 + std::sqrt(5.0)) / 10.0;

bool mentions(const CertificateReport& r, const std::string& tag) {
  for (const auto& v : r.violations)
    if (v.find(tag) != std::string::npos) return true;
  return false;
}

}  // namespace

TEST_CASE("preset certificates") {
  DualCertificate c4 = preset_certificate(4);
  CHECK(c4.beta_prime == doctest::Approx(kK4).epsilon(1e-15));
  CHECK(c4.b.at(1) == doctest::Approx(0.7236068).epsilon(1e-7));
  CHECK(c4.v[1] == doctest::Approx(0.3819660).epsilon(1e-7));
  CertificateReport r4 = check_certificate(c4);
  CHECK(r4.pass);
  CHECK(r4.certified_ratio == doctest::Approx(kK4).epsilon(1e-12));

  DualCertificate c6 = preset_certificate(6);
  CertificateReport r6 = check_certificate(c6);
  CHECK(r6.pass);
  CHECK(r6.certified_ratio == doctest::Approx(0.74).epsilon(1e-12));
  CHECK(threshold_ratio(c6.b) == doctest::Approx(0.74).epsilon(1e-12));

  CHECK_THROWS_AS(preset_certificate(5), Error);
  try {
    preset_thresholds(5);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::UnsupportedK);
  }
}

TEST_CASE("perturbed certificates fail") {
  DualCertificate c = preset_certificate(4);
  c.beta_prime += 0.01;
  CertificateReport r = check_certificate(c);
  CHECK_FALSE(r.pass);
  CHECK(mentions(r, "(9a)"));

  DualCertificate bad_v = preset_certificate(4);
  bad_v.v = {0, 0, 0, 0};
  CHECK_FALSE(check_certificate(bad_v).pass);

  DualCertificate bad_b = preset_certificate(6);
  bad_b.b.b[1] = 0.8;
  CHECK_FALSE(check_certificate(bad_b).pass);

  DualCertificate short_v = preset_certificate(4);
  short_v.v.pop_back();
  CHECK_FALSE(check_certificate(short_v).pass);
}

TEST_CASE("certificate json round trip") {
  DualCertificate c = preset_certificate(6);
  DualCertificate back = certificate_from_json(certificate_to_json(c));
  CHECK(back.K == 6);
  CHECK(back.beta_prime == c.beta_prime);
  CHECK(back.b.b == c.b.b);
  CHECK(back.v == c.v);

  auto path = std::filesystem::temp_directory_path() / "mvmnl_cert_test.json";
  write_certificate(c, path.string());
  CHECK(read_certificate(path.string()).v == c.v);
  std::filesystem::remove(path);

  try {
    certificate_from_json(R"({"K":4,"b":[0.7,0.4,0.2,0]})");
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::Parse);
    CHECK(std::string(e.what()).find("beta_prime") != std::string::npos);
  }
  CHECK_THROWS_AS(read_certificate("/nonexistent/cert.json"), Error);
}

TEST_CASE("grid search") {
  SearchResult k2 = grid_search_thresholds(2, 0.01);
  SearchResult k4 = grid_search_thresholds(4, 0.01);
  CHECK(check_certificate(k2.cert).pass);
  CHECK(check_certificate(k4.cert).pass);
  CHECK(k2.ratio < k4.ratio);
  CHECK(k4.grid_points > 0);

  SearchResult fine = grid_search_thresholds(4, 1e-3);
  CHECK(fine.ratio >= 0.723);
  CHECK(fine.ratio <= kK4 + 1e-9);
  CertificateReport fr = check_certificate(fine.cert);
  CHECK(fr.pass);
  CHECK(fr.certified_ratio == doctest::Approx(fine.ratio).epsilon(1e-12));

  SearchResult k6 = grid_search_thresholds(6, 0.01);
  CHECK(k6.ratio >= 0.73);
  CHECK(check_certificate(k6.cert).pass);

  CHECK_THROWS_AS(grid_search_thresholds(7, 0.01), Error);
  CHECK_THROWS_AS(grid_search_thresholds(4, 1e-4), Error);
}

TEST_CASE("sample_ratio") {
  ThresholdSet t = preset_thresholds(4);
  std::vector<std::vector<double>> zero(5, std::vector<double>(5, 0.0));
  CHECK(sample_ratio(t, 1.0, 1.0, zero, zero) == doctest::Approx(1.0));
}

TEST_CASE("beta_upper_sample") {
  ThresholdSet t4 = preset_thresholds(4);
  double a = beta_upper_sample(t4, 20000, 7);
  CHECK(a == beta_upper_sample(t4, 20000, 7));
  CHECK(a >= kK4 - 1e-9);
  CHECK(a <= 1.0 + 1e-12);
  ThresholdSet t6 = preset_thresholds(6);
  CHECK(beta_upper_sample(t6, 20000, 3) >= 0.74 - 1e-9);
}
