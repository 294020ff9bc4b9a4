#pragma once

namespace deal {

/// One ambient-light sample: seconds since session start, illuminance in lux.
/// Within a stream, t is strictly increasing and lux is non-negative.
struct Reading {
    double t = 0.0;
    double lux = 0.0;
};

}  // namespace deal
