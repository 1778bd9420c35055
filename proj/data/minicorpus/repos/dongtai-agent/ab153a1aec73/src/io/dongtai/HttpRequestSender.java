public class HttpRequestSender {
    private static StringBuilder sendRequest(HttpURLConnection connection, String method, String data) throws Exception {
        StringBuilder response = new StringBuilder();
        if (HttpMethods.POST.equals(method)) {
            connection.setRequestProperty(REQUEST_HEADER_CONTENT_LENGTH, Integer.toString(data.getBytes().length));
            connection.setDoOutput(true);
            OutputStream os = connection.getOutputStream();
            os.write(data.getBytes("UTF-8"));
            os.close();
        }
        connection.connect();
        InputStream is = connection.getInputStream();
        BufferedReader rd = new BufferedReader(new InputStreamReader(is));
        String line = rd.readLine();
        while (line != null) {
            response.append(line);
            line = rd.readLine();
        }
        rd.close();
        return response;
    }

    private static final String REQUEST_HEADER_CONTENT_LENGTH = "Content-Length";
    private int timeout = 3000;
}
