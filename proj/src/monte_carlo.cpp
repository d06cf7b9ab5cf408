// SPDX-License-Identifier: Apache-2.0
//
// ansec: secrecy-rate analysis for artificial-noise MIMO wiretap channels
// Copyright (C) 2026 The ansec Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include "ansec/monte_carlo.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "ansec/errors.hpp"
#include "ansec/parallel.hpp"
#include "ansec/random.hpp"

namespace ansec
{
    namespace
    {
        void fill_gaussian(ComplexMatrix &m, TrialStream &stream)
        {
            for (Eigen::Index j = 0; j < m.cols(); ++j)
                for (Eigen::Index i = 0; i < m.rows(); ++i)
                    m(i, j) = stream.complex_normal();
        }

        std::uint64_t chunk_count(std::uint64_t trials)
        {
            return (trials + kChunkTrials - 1) / kChunkTrials;
        }

        // Runs per_trial over [0, trials) in fixed chunks and merges the chunk
        // statistics in chunk order.
        template <typename F>
        RunningStats chunked_stats(std::uint64_t trials, unsigned threads, F &&per_trial)
        {
            const std::uint64_t n_chunks = chunk_count(trials);
            std::vector<RunningStats> parts(n_chunks);
            parallel_chunks(n_chunks, threads, [&](std::uint64_t c)
            {
                const std::uint64_t begin = c * kChunkTrials;
                const std::uint64_t end = std::min(trials, begin + kChunkTrials);
                RunningStats s;
                for (std::uint64_t t = begin; t < end; ++t)
                    s.push(per_trial(t));
                parts[c] = s;
            });
            RunningStats total;
            for (const auto &p : parts)
                total.merge(p);
            return total;
        }

        MCEstimate to_estimate(const RunningStats &s, std::uint64_t seed, bool clamp)
        {
            MCEstimate e;
            e.mean = s.mean;
            e.std_error = std::sqrt(s.sample_variance() / static_cast<double>(s.count));
            e.trials = s.count;
            e.seed = seed;
            e.clamped = clamp;
            return e;
        }

        double rate_or_throw(const SystemConfig &cfg, std::uint64_t trial, std::uint64_t seed)
        {
            try
            {
                return instantaneous_secrecy_rate(sample_channel(cfg, trial, seed), cfg);
            }
            catch (const NumericError &e)
            {
                if (e.trial_index)
                    throw;
                throw NumericError(e.what(), trial);
            }
        }
    }

    void attach_precoder(ChannelRealization &ch)
    {
        const Eigen::Index n_b = ch.h.rows();
        const Eigen::Index n_a = ch.h.cols();
        if (n_b < 1 || n_b >= n_a)
            throw DomainError("H must be N_B x N_A with N_B < N_A");
        Eigen::BDCSVD<ComplexMatrix> svd(ch.h, Eigen::ComputeFullV);
        if (svd.info() != Eigen::Success)
            throw NumericError("SVD of H did not converge");
        const auto &s = svd.singularValues();
        if (!(s(0) > 0.0) || !std::isfinite(s(0)) || s(n_b - 1) <= kRankTolerance * s(0))
            throw NumericError("H is rank deficient");
        ch.v1 = svd.matrixV().leftCols(n_b);
        ch.z = svd.matrixV().rightCols(n_a - n_b);
    }

    ChannelRealization sample_channel(const SystemConfig &cfg, std::uint64_t trial_index, std::uint64_t seed)
    {
        cfg.validate();
        TrialStream stream(seed, trial_index);
        ChannelRealization ch;
        ch.h.resize(cfg.n_b, cfg.n_a);
        ch.g.resize(cfg.n_e, cfg.n_a);
        fill_gaussian(ch.h, stream);
        fill_gaussian(ch.g, stream);
        try
        {
            attach_precoder(ch);
        }
        catch (const NumericError &e)
        {
            throw NumericError(e.what(), trial_index);
        }
        return ch;
    }

    double log_det_identity_plus(const ComplexMatrix &a)
    {
        ComplexMatrix m = a;
        return log_det_identity_plus_inplace(m);
    }

    double log_det_identity_plus_inplace(ComplexMatrix &m)
    {
        // Lower Cholesky of I + m, overwriting the lower triangle.
        const Eigen::Index n = m.rows();
        double acc = 0.0;
        for (Eigen::Index j = 0; j < n; ++j)
        {
            double d = 1.0 + m(j, j).real();
            for (Eigen::Index k = 0; k < j; ++k)
                d -= std::norm(m(j, k));
            if (!(d > 0.0) || !std::isfinite(d))
                throw NumericError("Cholesky factorisation failed");
            const double l = std::sqrt(d);
            acc += std::log(d);
            for (Eigen::Index i = j + 1; i < n; ++i)
            {
                std::complex<double> v = m(i, j);
                for (Eigen::Index k = 0; k < j; ++k)
                    v -= m(i, k) * std::conj(m(j, k));
                m(i, j) = v / l;
            }
            m(j, j) = l;
        }
        if (!std::isfinite(acc))
            throw NumericError("non-finite log-determinant");
        return acc;
    }

    double log_det_gram(const ComplexMatrix &g, double a)
    {
        if (a == 0.0 || g.size() == 0)
            return 0.0;
        ComplexMatrix gram;
        if (g.rows() <= g.cols())
            gram.noalias() = a * (g * g.adjoint());
        else
            gram.noalias() = a * (g.adjoint() * g);
        return log_det_identity_plus_inplace(gram);
    }

    double instantaneous_secrecy_rate(const ChannelRealization &ch, const SystemConfig &cfg)
    {
        const Eigen::Index n_a = cfg.n_a, n_b = cfg.n_b, n_e = cfg.n_e;
        if (ch.h.rows() != n_b || ch.h.cols() != n_a || ch.g.rows() != n_e || ch.g.cols() != n_a ||
            ch.v1.rows() != n_a || ch.v1.cols() != n_b || ch.z.rows() != n_a || ch.z.cols() != n_a - n_b)
            throw DomainError("channel dimensions do not match " + cfg.describe());
        if (cfg.alpha == 0.0)
            return 0.0;

        const double bob = log_det_gram(ch.h, cfg.alpha * cfg.gamma);

        const ComplexMatrix g1 = ch.g * ch.v1;
        const ComplexMatrix g2 = ch.g * ch.z;
        ComplexMatrix joint(n_e, n_a);
        joint.leftCols(n_b) = std::sqrt(cfg.alpha) * g1;
        joint.rightCols(n_a - n_b) = std::sqrt(cfg.alpha * cfg.beta) * g2;
        const double eve_total = log_det_gram(joint, 1.0);
        const double eve_noise = log_det_gram(g2, cfg.alpha * cfg.beta);

        return bob - (eve_total - eve_noise);
    }

    MCEstimate mc_average_secrecy_rate(const SystemConfig &cfg, std::uint64_t trials, std::uint64_t seed, bool clamp)
    {
        return mc_average_secrecy_rate(cfg, trials, seed, clamp, default_threads());
    }

    MCEstimate mc_average_secrecy_rate(const SystemConfig &cfg, std::uint64_t trials, std::uint64_t seed, bool clamp,
                                       unsigned threads)
    {
        cfg.validate();
        if (trials < 2)
            throw DomainError("at least two trials are required");
        if (cfg.alpha == 0.0)
        {
            RunningStats zero;
            zero.count = trials;
            return to_estimate(zero, seed, clamp);
        }
        const RunningStats s = chunked_stats(trials, threads, [&](std::uint64_t t)
        {
            const double r = rate_or_throw(cfg, t, seed);
            return clamp ? std::max(0.0, r) : r;
        });
        return to_estimate(s, seed, clamp);
    }

    MCEstimate mc_logdet_oracle(int rows, int cols, const std::vector<double> &profile, std::uint64_t trials,
                                std::uint64_t seed)
    {
        return mc_logdet_oracle(rows, cols, profile, trials, seed, default_threads());
    }

    MCEstimate mc_logdet_oracle(int rows, int cols, const std::vector<double> &profile, std::uint64_t trials,
                                std::uint64_t seed, unsigned threads)
    {
        if (rows < 1 || cols < 1)
            throw DomainError("rows and cols must be positive");
        if (profile.size() != static_cast<std::size_t>(cols))
            throw DomainError("profile length must equal cols");
        if (trials < 2)
            throw DomainError("at least two trials are required");
        Eigen::VectorXd root(cols);
        for (int j = 0; j < cols; ++j)
        {
            if (!(profile[j] >= 0.0) || !std::isfinite(profile[j]))
                throw DomainError("profile entries must be finite and nonnegative");
            root(j) = std::sqrt(profile[j]);
        }

        const RunningStats s = chunked_stats(trials, threads, [&](std::uint64_t t)
        {
            thread_local ComplexMatrix g;
            thread_local ComplexMatrix gram;
            g.resize(rows, cols);
            TrialStream stream(seed, t);
            for (Eigen::Index j = 0; j < cols; ++j)
                for (Eigen::Index i = 0; i < rows; ++i)
                    g(i, j) = stream.complex_normal() * root(j);
            if (rows <= cols)
                gram.noalias() = g * g.adjoint();
            else
                gram.noalias() = g.adjoint() * g;
            try
            {
                return log_det_identity_plus_inplace(gram);
            }
            catch (const NumericError &e)
            {
                throw NumericError(e.what(), t);
            }
        });
        return to_estimate(s, seed, false);
    }

    std::vector<double> mc_normalized_rate_sample(const SystemConfig &cfg, std::uint64_t realizations,
                                                  std::uint64_t seed)
    {
        return mc_normalized_rate_sample(cfg, realizations, seed, default_threads());
    }

    std::vector<double> mc_normalized_rate_sample(const SystemConfig &cfg, std::uint64_t realizations,
                                                  std::uint64_t seed, unsigned threads)
    {
        cfg.validate();
        if (realizations < 1)
            throw DomainError("at least one realization is required");
        std::vector<double> out(realizations);
        // One realization per work unit; these are expensive at large N_A.
        parallel_chunks(realizations, threads, [&](std::uint64_t t)
        {
            out[t] = rate_or_throw(cfg, t, seed) / cfg.n_b;
        });
        return out;
    }
}
