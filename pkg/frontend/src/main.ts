import { ApiClient } from "./api";
import { App, windowNavigation } from "./app";

const container = document.getElementById("app");
if (!container) throw new Error("missing #app container");

const app = new App(container, new ApiClient("/v1"), windowNavigation());
void app.start();
