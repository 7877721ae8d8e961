#pragma once

#define SLOPECERT_VERSION "0.1.0"
