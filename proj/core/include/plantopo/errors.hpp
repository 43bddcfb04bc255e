// Copyright 2026 The Plantopo Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

#include "plantopo/types.hpp"

namespace plantopo {

/// Base type for every failure the library reports.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed arguments (bad vertex lists, empty sets, out-of-range params).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Closed curve with signed area below the working tolerance.
class DegenerateCurve : public Error {
 public:
  using Error::Error;
};

/// A sampled displacement on the curve fell at or below the fixed-point
/// exclusion tolerance; carries the located witness.
class FixedPointOnCurve : public Error {
 public:
  FixedPointOnCurve(double t, Point2 where, double displacement)
      : Error("fixed point on curve at t=" + std::to_string(t)),
        t(t),
        where(where),
        displacement(displacement) {}

  double t;
  Point2 where;
  double displacement;
};

/// The adaptive sampler ran out of budget, or a closed-curve total failed
/// the integer snap.
class RefinementExhausted : public Error {
 public:
  using Error::Error;
};

/// Arc endpoints map to different points under the two fields being compared.
class EndpointMismatch : public Error {
 public:
  using Error::Error;
};

class DepthLimitExceeded : public Error {
 public:
  using Error::Error;
};

/// A filled cell region failed the topological-disc checks.
class NotADisc : public Error {
 public:
  using Error::Error;
};

class SiteOffBoundary : public Error {
 public:
  using Error::Error;
};

/// Probe mesh straddles the region being classified; the caller should
/// retry at a finer resolution.
class AmbiguousRegion : public Error {
 public:
  using Error::Error;
};

class SubdivisionStuck : public Error {
 public:
  using Error::Error;
};

class SearchExhausted : public Error {
 public:
  using Error::Error;
};

/// Pipeline could not produce the requested outcome (e.g. boundary index
/// vanished in locate mode).
class CertificationFailure : public Error {
 public:
  using Error::Error;
};

/// Text-format parse failure with 1-based line/column diagnostics.
class ParseError : public Error {
 public:
  ParseError(std::string path, std::size_t line, std::size_t column, const std::string& message)
      : Error(path + ":" + std::to_string(line) + ":" + std::to_string(column) + ": " + message),
        path(std::move(path)),
        line(line),
        column(column) {}

  std::string path;
  std::size_t line;
  std::size_t column;
};

}  // namespace plantopo
