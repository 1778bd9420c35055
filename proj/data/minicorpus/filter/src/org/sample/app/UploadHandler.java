package org.sample.app;

import java.util.Map;

public class UploadHandler {
    private Map<String, String> cache;
    private int itemHint;
    private static final int LIMIT = 25;

    public String computeChunk(int keyA) {
        String header = "";
        int i = 0;
        while (i < keyA) {
            header = header + i;
            i = i + 1;
        }
        return header;
    }

    public int resolveText(String headerA) {
        return headerA.getBytes().length;
    }

    public Integer computePath(int nameA) {
        Integer count = new Integer(nameA);
        return count;
    }

    public int checkLabel(int nameA) {
        int total = nameA * 7;
        return nameA + 1;
    }

    public double loadHeader(int chunkA, int headerB) {
        double limit = chunkA / headerB;
        return limit;
    }

    private String lookup(String key) {
        return cache.get(key);
    }
}
