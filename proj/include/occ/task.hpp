#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "occ/report.hpp"

namespace occ {

// Task files are line oriented; '#' starts a comment.
//
//   law universal            (or: law custom <expression in x, y>)
//   truncation 4
//   mode rationals           (optional; integers or rationals)
//   variables u v w:2        (class variables, optional degree)
//   bundle E = u, 0, F(u,v)
//   output json              (optional; text is the default)
//   action pushforward E t^2
//
// Errors in the file are reported as "line L, column C: message".

struct TaskLine {
  std::size_t line = 0;
  std::size_t column = 0;  // of `text`
  std::string text;
};

struct TaskBundle {
  std::string name;
  std::vector<TaskLine> roots;
};

struct TaskAction {
  std::size_t line = 0;
  std::string kind;
  TaskLine rest;  // everything after the action kind
};

struct Task {
  std::string law;
  std::size_t law_line = 0;
  std::optional<TaskLine> custom_law;
  int truncation = 0;
  CoefficientMode mode = CoefficientMode::rationals;
  std::vector<Variable> variables;
  std::vector<TaskBundle> bundles;
  std::vector<TaskAction> actions;
  bool json = false;
};

Task parse_task(std::string_view text);

/// Validates every expression first (position-annotated parse errors),
/// then runs the actions in order. Computation errors are rethrown with
/// the action index.
Report run_task(const Task &task, std::string name = "task");

/// The action kinds understood by run_task.
std::vector<std::string> task_action_kinds();

}  // namespace occ
