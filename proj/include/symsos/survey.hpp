// Rank distributions of SDP optima under random invariant objectives.
#pragma once

#include <Eigen/Dense>
#include <map>
#include <string>
#include <vector>

#include "symsos/certify.hpp"

namespace symsos {

struct SurveyRecord {
  int sample = 0;
  unsigned long long seed = 0;
  SdpStatus status = SdpStatus::Indeterminate;
  Eigen::VectorXd params;
  std::vector<int> block_ranks;
  int total_rank = -1;  // -1 when the solve did not produce a PSD point
};

struct SurveyReport {
  std::string instance;
  std::vector<SurveyRecord> records;
  std::map<int, int> histogram;  // total rank -> count; failed samples under -1
};

struct SurveyOptions {
  int samples = 100;
  unsigned long long seed = 0;
  int jobs = 1;
  double rank_tol = 1e-7;
  SdpOptions sdp;
};

// Per-sample seed, independent of the thread schedule.
unsigned long long sample_seed(unsigned long long master, int index);

// Throws domain_error when f is not SOS.
SurveyReport rank_survey(const SparsePoly& f, const GroupRep& rep, const SurveyOptions& opts);

std::string histogram_csv(const SurveyReport& r);
std::string survey_json(const SurveyReport& r, int indent = 2);

}  // namespace symsos
